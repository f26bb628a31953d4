"""Independent models used to cross-check the word-based Coxeter arithmetic.

These are test oracles only; the primary element representation everywhere
else in the package is the reduced word.  Types A, B and D get permutation
models, and arbitrary crystallographic-entry systems get the integer-matrix
reflection representation (used for the affine example).
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .coxeter import CoxElem, CoxeterError, CoxeterSystem, named_system


# -- permutation models ------------------------------------------------------
#
# A permutation oracle is a list of generator images; an element image is the
# composition of the letter images of any reduced word.  Signed permutations
# are tuples over {+-1..+-n} mapping position i (0-based) to a signed value.


def _compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
    """(p then q) on signed tuples: apply q after p."""
    out = []
    for v in p:
        w = q[abs(v) - 1]
        out.append(w if v > 0 else -w)
    return tuple(out)


compose = _compose  # public name: the oracle-side group law


def _transposition(n: int, i: int, j: int, flip: bool = False) -> Tuple[int, ...]:
    img = list(range(1, n + 1))
    img[i], img[j] = img[j], img[i]
    if flip:
        img[i], img[j] = -img[i], -img[j]
    return tuple(img)


def _sign_flip(n: int, i: int) -> Tuple[int, ...]:
    img = list(range(1, n + 1))
    img[i] = -img[i]
    return tuple(img)


class PermutationOracle:
    """Generator images in a (signed) permutation group."""

    def __init__(self, system: CoxeterSystem, degree: int, gen_images):
        self.system = system
        self.degree = degree
        self.gen_images = list(gen_images)
        self.identity = tuple(range(1, degree + 1))

    @classmethod
    def type_A(cls, n: int) -> "PermutationOracle":
        """A_n as permutations of n+1 points; s_i = (i, i+1)."""
        system = named_system(f"A{n}")
        deg = n + 1
        return cls(system, deg, [_transposition(deg, i, i + 1) for i in range(n)])

    @classmethod
    def type_B(cls, n: int) -> "PermutationOracle":
        """B_n as signed permutations; s_1 flips the first coordinate."""
        system = named_system(f"B{n}")
        gens = [_sign_flip(n, 0)]
        gens += [_transposition(n, i - 1, i) for i in range(1, n)]
        return cls(system, n, gens)

    @classmethod
    def type_D(cls, n: int) -> "PermutationOracle":
        """D_n as even-signed permutations, generator order s2, s2', s3..sn."""
        system = named_system(f"D{n}")
        gens = [_transposition(n, 0, 1),
                _transposition(n, 0, 1, flip=True)]
        gens += [_transposition(n, i - 1, i) for i in range(2, n)]
        return cls(system, n, gens)

    @classmethod
    def for_system(cls, name: str) -> "PermutationOracle":
        kind, rank = name[:1], name[1:]
        if kind in ("A", "B", "D") and rank.isdigit():
            return getattr(cls, f"type_{kind}")(int(rank))
        raise CoxeterError(f"no permutation oracle for {name!r}")

    def image_of_word(self, word: Sequence[int]) -> Tuple[int, ...]:
        img = self.identity
        for s in word:
            img = _compose(img, self.gen_images[s])
        return img

    def image(self, el: CoxElem) -> Tuple[int, ...]:
        return self.image_of_word(el.word)

    def descents(self, perm: Tuple[int, ...], side: str = "right") -> frozenset:
        """Descents read off the permutation image (independent of words)."""
        out = set()
        for s, g in enumerate(self.gen_images):
            probe = _compose(g, perm) if side == "left" else _compose(perm, g)
            # l(ws) < l(w) iff multiplying shortens; decide by oracle length
            if self.length(probe) < self.length(perm):
                out.add(s)
        return frozenset(out)

    def length(self, perm: Tuple[int, ...]) -> int:
        """Coxeter length from the combinatorial inversion statistics."""
        n = self.degree
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        if all(v > 0 for v in perm) and len(self.gen_images) == n - 1:
            return inv  # type A
        neg = sum(1 for v in perm if v < 0)
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] + perm[j] < 0)
        if len(self.gen_images) == n and self.system.matrix[0][1] == 4:
            return inv + neg + nsp  # type B
        return inv + nsp  # type D


# -- integer matrix representation -------------------------------------------

_CARTAN_PRODUCT = {2: 0, 3: 1, 4: 2, 6: 3}  # a_ij * a_ji = 4 cos^2(pi/m)


class MatrixOracle:
    """Exact reflection representation over the integers.

    Uses an integral generalized Cartan matrix: a_ii = 2 and, for i != j,
    a_ij a_ji = 4 cos^2(pi/m_ij), which is an integer exactly for the
    crystallographic orders m in {2, 3, 4, 6} (the split 1 * k puts the larger
    entry below the diagonal).  The generator s_i acts on the root basis by
    alpha_j -> alpha_j - a_ij alpha_i; this representation is faithful, so
    matrix images give an independent equality test.
    """

    def __init__(self, system: CoxeterSystem):
        n = system.rank
        cartan = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = system.matrix[i][j]
                if m is None or m not in _CARTAN_PRODUCT:
                    raise CoxeterError(f"matrix oracle needs bond orders in {{2,3,4,6}}, got {m}")
                prod = _CARTAN_PRODUCT[m]
                if prod == 0:
                    cartan[i][j] = 0
                else:
                    cartan[i][j] = -1 if i < j else -prod
        self.system = system
        self.gen_mats = []
        for i in range(n):
            # column-action matrix M with (s_i x)_a = sum_b M[a][b] x_b on
            # root coordinates: alpha_j -> alpha_j - a_ij alpha_i
            mat = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
            for j in range(n):
                mat[i][j] -= cartan[i][j]
            self.gen_mats.append(tuple(tuple(r) for r in mat))
        self.identity = tuple(tuple(1 if a == b else 0 for b in range(n)) for a in range(n))

    def _matmul(self, A, B):
        n = self.system.rank
        return tuple(tuple(sum(A[a][k] * B[k][b] for k in range(n)) for b in range(n))
                     for a in range(n))

    def image_of_word(self, word: Sequence[int]):
        img = self.identity
        for s in word:
            img = self._matmul(img, self.gen_mats[s])
        return img

    def image(self, el: CoxElem):
        return self.image_of_word(el.word)
