"""Reidemeister-Schreier machinery for D_I = p^{-1}(W_I) inside B_W.

Coset representatives of D_I\\B_W are the I-reduced reduced lifts; rewriting a
braid word letter by letter against this transversal yields the generators
a_{b,s} = b s^2 b^{-1} (plus I itself) and, applied to the braid relations at
every representative, a complete set of relations.  The closed forms of the
relation families (1) and (2) are implemented directly and can be
cross-checked against the raw rewriting.

Words over the presentation generators are tuples of (symbol, +-1) where a
symbol is ("s", i) for a Coxeter-lift generator or ("a", base_word, i) for a
pure generator a_{b,s}.
"""

from __future__ import annotations

import json
from typing import Iterable, List, Optional, Sequence, Tuple

from .braid import BraidWord, lift
from .coxeter import (
    CoxElem,
    CoxeterError,
    CoxeterSystem,
    _alt,
    coset_rep,
    is_I_reduced,
    is_reflection,
    longest_element,
    subsystem,
)
from .nmap import eval_Np

Symbol = tuple
Word = Tuple[Tuple[Symbol, int], ...]


# ---------------------------------------------------------------------------
# symbols and words


def cox_symbol(s: int) -> Symbol:
    return ("s", s)


def pure_symbol(base: CoxElem, gen: int) -> Symbol:
    return ("a", base.word, gen)


class PureGenerator:
    """The pure generator a_{b,s} = b s^2 b^{-1} with b s reduced, I-reduced."""

    __slots__ = ("system", "base", "gen")

    def __init__(self, system: CoxeterSystem, base: CoxElem, gen: int,
                 I: Iterable[int] = ()):
        bs = base * system.gen(gen)
        if len(bs) != len(base) + 1:
            raise CoxeterError(f"base times s{gen} is not reduced")
        if not is_I_reduced(bs, I):
            raise CoxeterError("base times generator is not I-reduced")
        self.system = system
        self.base = base
        self.gen = gen

    @property
    def symbol(self) -> Symbol:
        return pure_symbol(self.base, self.gen)

    def braid(self) -> BraidWord:
        b = lift(self.base)
        return b * BraidWord(self.system, [(self.gen, 1)] * 2) * b.inv()

    def reflection(self) -> CoxElem:
        """p(b s b~), the reflection underlying this generator."""
        return self.base * self.system.gen(self.gen) * self.base.inv()

    def __eq__(self, other):
        return isinstance(other, PureGenerator) and self.symbol == other.symbol \
            and self.system == other.system

    def __hash__(self):
        return hash((self.system.matrix, self.symbol))

    def __repr__(self):
        return symbol_str(self.system, self.symbol)


def symbol_str(system: CoxeterSystem, sym: Symbol) -> str:
    if sym[0] == "s":
        return system.labels[sym[1]]
    base = system.word_str(sym[1]) or "e"
    return f"a[{base};{system.labels[sym[2]]}]"


def symbol_key(sym: Symbol):
    if sym[0] == "s":
        return (0, sym[1])
    return (1, len(sym[1]), sym[1], sym[2])


def word_key(word: Word):
    return (len(word), tuple((symbol_key(s), 0 if e == 1 else 1) for s, e in word))


def free_reduce_word(word: Iterable[Tuple[Symbol, int]]) -> Word:
    out: List[Tuple[Symbol, int]] = []
    for sym, e in word:
        if out and out[-1] == (sym, -e):
            out.pop()
        else:
            out.append((sym, e))
    return tuple(out)


def invert_word(word: Word) -> Word:
    return tuple((sym, -e) for sym, e in reversed(word))


def word_str(system: CoxeterSystem, word: Word) -> str:
    if not word:
        return "1"
    return " ".join(symbol_str(system, s) + ("" if e == 1 else "^-1")
                    for s, e in word)


def symbol_to_braid(system: CoxeterSystem, sym: Symbol) -> BraidWord:
    if sym[0] == "s":
        return BraidWord(system, [(sym[1], 1)])
    base = BraidWord.from_positive(system, sym[1])
    return base * BraidWord(system, [(sym[2], 1)] * 2) * base.inv()


def word_to_braid(system: CoxeterSystem, word: Word) -> BraidWord:
    out = BraidWord(system)
    for sym, e in word:
        b = symbol_to_braid(system, sym)
        out = out * (b if e == 1 else b.inv())
    return out


def normalize_relation(u: Word, v: Word) -> Optional[Tuple[Word, Word]]:
    """Freely reduce, drop tautologies, put the ShortLex-smaller side first."""
    u, v = free_reduce_word(u), free_reduce_word(v)
    if u == v:
        return None
    return (u, v) if word_key(u) <= word_key(v) else (v, u)


def canonical_relator(u: Word, v: Word) -> Word:
    """Cyclically reduced u v^-1, minimized over rotations and inversion.

    Two relations are consequences of each other by conjugation/inversion
    alone iff their canonical relators coincide; used for golden comparisons.
    """
    r = list(free_reduce_word(tuple(u) + invert_word(tuple(v))))
    while len(r) >= 2 and r[0] == (r[-1][0], -r[-1][1]):
        r = r[1:-1]
    r = tuple(r)
    if not r:
        return ()
    candidates = []
    for w in (r, invert_word(r)):
        for k in range(len(w)):
            candidates.append(w[k:] + w[:k])
    return min(candidates, key=word_key)


# ---------------------------------------------------------------------------
# the rewriting process


def _I_descent_conjugator(rep: CoxElem, ws: CoxElem, I) -> int:
    """The t in I with ws = t rep, for rep I-reduced and ws = rep*s non-I-reduced."""
    system = rep.system
    for t in I:
        if system.gen(t) * rep == ws:
            return t
    raise CoxeterError("no conjugating generator found")  # unreachable


def schreier_step(system: CoxeterSystem, I, rep: CoxElem, s: int):
    """One positive letter: returns (emitted word, new representative).

    Three cases: rep*s reduced and I-reduced emits nothing; rep*s reduced but
    not I-reduced emits t in I (with rep*s = t*rep, representative unchanged);
    s a right descent of rep emits the pure generator a_{[rep*s], s}.
    """
    I = tuple(I)
    ws = rep * system.gen(s)
    if len(ws) == len(rep) + 1:
        if is_I_reduced(ws, I):
            return (), ws
        t = _I_descent_conjugator(rep, ws, I)
        return ((cox_symbol(t), 1),), rep
    return ((pure_symbol(ws, s), 1),), ws


def schreier_rewrite(b: BraidWord, I) -> Tuple[Word, CoxElem]:
    """Rewrite b as (word over generators of D_I) * (reduced lift of a rep).

    The identity b = word * lift(rep) holds in B_W and is certified by eval_Np
    in the tests.
    """
    system = b.system
    I = tuple(I)
    rep = system.identity
    out: List[Tuple[Symbol, int]] = []
    for s, e in b.letters:
        if e == 1:
            emitted, rep = schreier_step(system, I, rep, s)
            out.extend(emitted)
        else:
            new_rep = coset_rep(rep * system.gen(s), I)
            emitted, back = schreier_step(system, I, new_rep, s)
            assert back == rep
            out.extend(invert_word(emitted))
            rep = new_rep
    return free_reduce_word(out), rep


# ---------------------------------------------------------------------------
# generators


def I_reduced_elements(system: CoxeterSystem, I,
                       max_length: Optional[int] = None) -> List[CoxElem]:
    I = frozenset(I)
    if max_length is None and not system.is_finite():
        raise CoxeterError("max_length required for an infinite system")
    return [w for w in system.enumerate_elements(max_length=max_length)
            if is_I_reduced(w, I)]


def presentation_generators(system: CoxeterSystem, I,
                            max_length: Optional[int] = None) -> List[PureGenerator]:
    """All a_{b,s} with b*s reduced and I-reduced (Schreier generators)."""
    I = tuple(sorted(set(I)))
    out = []
    for b in I_reduced_elements(system, I, max_length):
        for s in range(system.rank):
            bs = b * system.gen(s)
            if len(bs) == len(b) + 1 and is_I_reduced(bs, I):
                out.append(PureGenerator(system, b, s, I))
    out.sort(key=lambda g: symbol_key(g.symbol))
    return out


def minimal_generating_set(system: CoxeterSystem, I,
                           max_length: Optional[int] = None) -> List[PureGenerator]:
    """One a_{b,s} per reflection b s b^{-1} outside W_I, with the shortest
    (then ShortLex-least) base; these already generate D_I together with I."""
    from .coxeter import in_parabolic

    I = tuple(sorted(set(I)))
    best = {}
    for g in presentation_generators(system, I, max_length):
        t = g.reflection()
        if in_parabolic(t, I):
            continue
        cur = best.get(t)
        if cur is None or (len(g.base), g.base.word) < (len(cur.base), cur.base.word):
            best[t] = g
    return sorted(best.values(), key=lambda g: symbol_key(g.symbol))


# ---------------------------------------------------------------------------
# closed-form relations (families of Prop. "presentation de D_I")


def _wst(system: CoxeterSystem, s: int, t: int, i: int) -> CoxElem:
    return CoxElem(system, system._canonical(_alt(s, t, i))) if i else system.identity


def _a_super(system: CoxeterSystem, I, b0: CoxElem, s: int, t: int, j: int) -> Symbol:
    """a^{(j)}_{b0,s,t} = a_{b0 . (s t s ...)_j, r}, r = s for even j, t for odd."""
    base = system.normal_form(b0.word + _alt(s, t, j))
    if len(base) != len(b0) + j:
        raise CoxeterError("b0 times the alternating word is not reduced")
    r = s if j % 2 == 0 else t
    return PureGenerator(system, base, r, I).symbol


def relation_for(system: CoxeterSystem, I, b0: CoxElem, s: int, t: int,
                 i: int) -> Optional[Tuple[Word, Word]]:
    """Closed form of the rewriting of b0 (sts..)_m = b0 (tst..)_m at level i.

    i = 0 is the degenerate case: trivial unless both b0 s and b0 t fail to be
    I-reduced, in which case it is the braid relation between the conjugating
    generators s', t' in I.  For i >= 1 the representative is b0 (sts..)_i and
    the relation belongs to family (1) (b0 t I-reduced, i = 1..m) or family
    (2) (b0 t = s' b0, i = 1..m-1).
    """
    I = tuple(sorted(set(I)))
    m = system.m(s, t)
    if m is None:
        raise CoxeterError("the bond order m(s,t) must be finite")
    b0s = b0 * system.gen(s)
    b0t = b0 * system.gen(t)
    if len(b0s) != len(b0) + 1 or len(b0t) != len(b0) + 1:
        raise CoxeterError("b0 must be reduced-{s,t}")
    s_red = is_I_reduced(b0s, I)
    t_red = is_I_reduced(b0t, I)
    if i == 0:
        if s_red or t_red:
            return None
        sp = _I_descent_conjugator(b0, b0s, I)
        tp = _I_descent_conjugator(b0, b0t, I)
        lhs = tuple((cox_symbol(x), 1) for x in _alt(sp, tp, m))
        rhs = tuple((cox_symbol(x), 1) for x in _alt(tp, sp, m))
        return normalize_relation(lhs, rhs)
    if not s_red:
        raise CoxeterError("b0 s must be I-reduced when i >= 1")
    if t_red:
        if not 1 <= i <= m:
            raise CoxeterError(f"family (1) needs 1 <= i <= m, got {i}")
        lhs = tuple((_a_super(system, I, b0, s, t, j), 1)
                    for j in range(m - 1, m - i - 1, -1))
        rhs = tuple((_a_super(system, I, b0, t, s, j), 1)
                    for j in range(i - 1, -1, -1))
        return normalize_relation(lhs, rhs)
    if not 1 <= i <= m - 1:
        raise CoxeterError(f"family (2) needs 1 <= i <= m-1, got {i}")
    sp = _I_descent_conjugator(b0, b0t, I)
    lhs = ((cox_symbol(sp), 1),) + tuple((_a_super(system, I, b0, s, t, j), 1)
                                         for j in range(m - 2, m - i - 2, -1))
    rhs = tuple((_a_super(system, I, b0, s, t, j), 1)
                for j in range(i - 1, -1, -1)) + ((cox_symbol(sp), 1),)
    return normalize_relation(lhs, rhs)


def decompose_alternating(b: CoxElem, s: int, t: int):
    """b = b0 (xy x...)_i with i maximal and b0 reduced-{s,t}; returns
    (b0, oriented pair (x,y), i) or None when neither orientation applies."""
    system = b.system
    m = system.m(s, t)
    cap = len(b) if m is None else min(m, len(b))
    best = None
    for x, y in ((s, t), (t, s)) if s <= t else ((t, s), (s, t)):
        for i in range(cap, -1, -1):
            tail = _wst(system, x, y, i)
            b0 = b * tail.inv()
            if len(b0) != len(b) - i:
                continue
            if len(b0 * system.gen(x)) != len(b0) + 1:
                continue
            if len(b0 * system.gen(y)) != len(b0) + 1:
                continue
            if best is None or i > best[3]:
                best = (b0, x, y, i)
            break
    if best is None:
        return None
    return best


def rewrite_braid_relation(system: CoxeterSystem, I, rep: CoxElem,
                           s: int, t: int) -> Optional[Tuple[Word, Word]]:
    """Raw Schreier rewriting of rep (sts..)_m = rep (tst..)_m."""
    m = system.m(s, t)
    if m is None:
        raise CoxeterError("the bond order m(s,t) must be finite")
    lhs_b = lift(rep) * BraidWord.from_positive(system, _alt(s, t, m))
    rhs_b = lift(rep) * BraidWord.from_positive(system, _alt(t, s, m))
    lhs, lrep = schreier_rewrite(lhs_b, I)
    rhs, rrep = schreier_rewrite(rhs_b, I)
    assert lrep == rrep
    return normalize_relation(lhs, rhs)


# ---------------------------------------------------------------------------
# presentations


class Presentation:
    """Generators (Coxeter lifts of I plus pure generators) and relations."""

    def __init__(self, system: CoxeterSystem, I, generators: Sequence[Symbol],
                 relations: Sequence[Tuple[Word, Word]], partial: bool = False):
        self.system = system
        self.I = tuple(sorted(set(I)))
        self.generators = tuple(generators)
        declared = set(self.generators)
        for u, v in relations:
            for sym, _ in tuple(u) + tuple(v):
                if sym not in declared:
                    raise CoxeterError(f"undeclared symbol {sym}")
        self.relations = tuple(relations)
        self.partial = partial

    def pure_generators(self):
        return [g for g in self.generators if g[0] == "a"]

    def relator_set(self) -> frozenset:
        return frozenset(canonical_relator(u, v) for u, v in self.relations)

    def to_text(self) -> str:
        gens = ", ".join(symbol_str(self.system, g) for g in self.generators)
        rels = ", ".join(f"{word_str(self.system, u)} = {word_str(self.system, v)}"
                         for u, v in self.relations)
        return f"< {gens} | {rels} >"

    def to_json(self) -> dict:
        def enc_sym(sym):
            if sym[0] == "s":
                return {"tag": "cox", "gen": self.system.labels[sym[1]]}
            return {"tag": "pure", "base": self.system.word_str(sym[1]),
                    "gen": self.system.labels[sym[2]]}

        def enc_word(word):
            return [[symbol_str(self.system, s), e] for s, e in word]

        return {
            "system": self.system.name or f"rank{self.system.rank}",
            "I": [self.system.labels[i] for i in self.I],
            "generators": [enc_sym(g) for g in self.generators],
            "relations": [[enc_word(u), enc_word(v)] for u, v in self.relations],
            "partial": self.partial,
        }

    @classmethod
    def from_json(cls, system: CoxeterSystem, doc) -> "Presentation":
        if isinstance(doc, str):
            doc = json.loads(doc)
        name_to_sym = {}
        gens = []
        for g in doc["generators"]:
            if g["tag"] == "cox":
                sym = cox_symbol(system.labels.index(g["gen"]))
            else:
                base = system.normal_form(system.parse_word(g["base"]))
                sym = pure_symbol(base, system.labels.index(g["gen"]))
            gens.append(sym)
            name_to_sym[symbol_str(system, sym)] = sym
        rels = []
        for u, v in doc["relations"]:
            rels.append((tuple((name_to_sym[n], e) for n, e in u),
                         tuple((name_to_sym[n], e) for n, e in v)))
        I = tuple(system.labels.index(lbl) for lbl in doc["I"])
        return cls(system, I, gens, rels, partial=doc.get("partial", False))


def _braid_relations_among(system: CoxeterSystem, I) -> List[Tuple[Word, Word]]:
    out = []
    I = sorted(set(I))
    for a in range(len(I)):
        for b in range(a + 1, len(I)):
            sp, tp = I[a], I[b]
            m = system.m(sp, tp)
            if m is None:
                continue
            lhs = tuple((cox_symbol(x), 1) for x in _alt(sp, tp, m))
            rhs = tuple((cox_symbol(x), 1) for x in _alt(tp, sp, m))
            rel = normalize_relation(lhs, rhs)
            if rel is not None:
                out.append(rel)
    return out


def presentation_DI(system: CoxeterSystem, I, max_length: Optional[int] = None,
                    family1_top: bool = True) -> Presentation:
    """The full presentation of D_I (Prop. "presentation de D_I").

    family1_top=False drops the i = m instances of family (1), which is the
    pure-braid-group convention; with I nonempty they can be genuine relations
    (type D_n produces the commutation a_2 a_2' = a_2' a_2 that way).
    """
    I = tuple(sorted(set(I)))
    partial = max_length is not None and not (system._finite is True)
    gens = [cox_symbol(i) for i in I] + \
           [g.symbol for g in presentation_generators(system, I, max_length)]
    relations = list(_braid_relations_among(system, I))
    seen = {frozenset((u, v)) for u, v in relations}
    candidates = I_reduced_elements(system, I, max_length)
    for s in range(system.rank):
        for t in range(system.rank):
            if s == t:
                continue
            m = system.m(s, t)
            if m is None:
                continue
            for b0 in candidates:
                b0s = b0 * system.gen(s)
                b0t = b0 * system.gen(t)
                if len(b0s) != len(b0) + 1 or len(b0t) != len(b0) + 1:
                    continue
                s_red = is_I_reduced(b0s, I)
                t_red = is_I_reduced(b0t, I)
                if not s_red and not t_red:
                    i_range = (0,)
                elif not s_red:
                    continue  # handled with the couple (t, s)
                elif t_red:
                    top = m + 1 if family1_top else m
                    i_range = range(1, top)
                else:
                    i_range = range(1, m)
                if max_length is not None and len(b0) + max(i_range, default=0) \
                        > max_length:
                    partial = True
                for i in i_range:
                    if max_length is not None and len(b0) + i > max_length:
                        continue
                    rel = relation_for(system, I, b0, s, t, i)
                    if rel is None:
                        continue
                    # family (1) at level i references bases up to length
                    # len(b0) + m - 1, which can exceed a truncation cap
                    if max_length is not None and any(
                            sym[0] == "a" and len(sym[1]) > max_length
                            for side in rel for sym, _ in side):
                        partial = True
                        continue
                    key = frozenset(rel)
                    if key not in seen:
                        seen.add(key)
                        relations.append(rel)
    relations.sort(key=lambda r: (word_key(r[0]), word_key(r[1])))
    return Presentation(system, I, gens, relations, partial=partial)


def presentation_pure(system: CoxeterSystem,
                      max_length: Optional[int] = None) -> Presentation:
    """Presentation of the pure braid group P_W (I empty, family (1) with
    i = 1..m-1 only)."""
    return presentation_DI(system, (), max_length=max_length, family1_top=False)


def crosscheck_closed_vs_raw(system: CoxeterSystem, I,
                             max_length: Optional[int] = None) -> dict:
    """Raw rewriting of every representative relation vs the closed forms."""
    I = tuple(sorted(set(I)))
    checked = 0
    failures = []
    for rep in I_reduced_elements(system, I, max_length):
        for s in range(system.rank):
            for t in range(s + 1, system.rank):
                m = system.m(s, t)
                if m is None:
                    continue
                if max_length is not None and len(rep) + m > max_length:
                    continue
                raw = rewrite_braid_relation(system, I, rep, s, t)
                dec = decompose_alternating(rep, s, t)
                assert dec is not None
                b0, x, y, i = dec
                # family (1) is stated for the couple opposite to the tail
                # orientation; family (2) and the i = 0 case follow the tail
                if i >= 1 and is_I_reduced(b0 * system.gen(y), I):
                    closed = relation_for(system, I, b0, y, x, i)
                else:
                    closed = relation_for(system, I, b0, x, y, i)
                checked += 1
                if raw != closed:
                    failures.append((str(rep), system.labels[s], system.labels[t]))
    return {"checked": checked, "failures": failures, "passed": not failures}


def soundness_report(p: Presentation) -> dict:
    """eval_Np certificate: both sides of every relation agree in ZT x| W."""
    failures = []
    for u, v in p.relations:
        bu = word_to_braid(p.system, u)
        bv = word_to_braid(p.system, v)
        if eval_Np(bu) != eval_Np(bv):
            failures.append((word_str(p.system, u), word_str(p.system, v)))
    return {"checked": len(p.relations), "failures": failures,
            "passed": not failures}


# ---------------------------------------------------------------------------
# abelianization


def abelianization(p: Presentation) -> dict:
    """Invariant factors of the relation matrix (Smith normal form)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    index = {g: k for k, g in enumerate(p.generators)}
    rows = []
    for u, v in p.relations:
        row = [0] * len(p.generators)
        for sym, e in u:
            row[index[sym]] += e
        for sym, e in v:
            row[index[sym]] -= e
        rows.append(row)
    n = len(p.generators)
    if not rows:
        return {"free_rank": n, "torsion": []}
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.rows, snf.cols))]
    nonzero = [d for d in diag if d != 0]
    return {"free_rank": n - len(nonzero),
            "torsion": [d for d in nonzero if d != 1]}


# ---------------------------------------------------------------------------
# semidirect splitting D_I = U_I x| B_I


def retraction_h(word: Word) -> Word:
    """h: D_I -> B_{W_I}: kills pure generators, fixes I."""
    return free_reduce_word((sym, e) for sym, e in word if sym[0] == "s")


def _equal_I_words(system: CoxeterSystem, u: Word, v: Word) -> bool:
    """Equality in B_{W_I} for retraction images: syntactic equality or a
    defining braid relation (the only cases the relations produce)."""
    u, v = free_reduce_word(u), free_reduce_word(v)
    if u == v:
        return True
    if len(u) != len(v) or not u:
        return False
    if any(e != 1 for _, e in u + v):
        return False
    a, b = u[0][0][1], v[0][0][1]
    m = system.m(a, b)
    if m != len(u):
        return False
    return (u == tuple((cox_symbol(x), 1) for x in _alt(a, b, m))
            and v == tuple((cox_symbol(x), 1) for x in _alt(b, a, m)))


def semidirect_split(system: CoxeterSystem, I,
                     max_length: Optional[int] = None) -> dict:
    """Report for D_I = U_I x| B_I: h o j = id and relations survive h."""
    I = tuple(sorted(set(I)))
    p = presentation_DI(system, I, max_length=max_length)
    failures = []
    for u, v in p.relations:
        if not _equal_I_words(system, retraction_h(u), retraction_h(v)):
            failures.append((word_str(system, u), word_str(system, v)))
    # h o j = identity: each generator of B_{W_I} maps to itself
    hj_ok = all(retraction_h(((cox_symbol(i), 1),)) == ((cox_symbol(i), 1),)
                for i in I)
    return {
        "I": [system.labels[i] for i in I],
        "normal_generators": [symbol_str(system, g) for g in p.pure_generators()],
        "retraction_ok": hj_ok,
        "relations_preserved": not failures,
        "failures": failures,
        "passed": hj_ok and not failures,
    }


# ---------------------------------------------------------------------------
# devissage


class DevissageChain:
    """Nested parabolic chain with per-level U_j generator lists."""

    def __init__(self, system: CoxeterSystem, chain, levels, total_pure: int):
        self.system = system
        self.chain = chain
        self.levels = levels
        self.total_pure = total_pure

    def to_json(self) -> dict:
        return {
            "chain": [[self.system.labels[i] for i in I] for I in self.chain],
            "levels": self.levels,
            "total_pure_generators": self.total_pure,
        }


def devissage(system: CoxeterSystem, chain) -> DevissageChain:
    """Per-level U_j generators along I_0 c I_1 c ... c I_n = S.

    Equal consecutive levels are allowed only when both are empty (the D_n
    convention I_1 = I_0 = empty).
    """
    chain = [tuple(sorted(set(I))) for I in chain]
    if not chain or chain[0] != ():
        chain = [()] + chain
    if chain[-1] != tuple(range(system.rank)):
        raise CoxeterError("the chain must end with the full generator set")
    for prev, cur in zip(chain, chain[1:]):
        if not set(prev) <= set(cur):
            raise CoxeterError("the chain must be increasing")
        if prev == cur and cur != ():
            raise CoxeterError("repeated nonempty level in the chain")
    levels = []
    total = 0
    for prev, cur in zip(chain, chain[1:]):
        if not cur:
            levels.append({"I": [], "ambient": [], "generators": [], "count": 0})
            continue
        ambient = subsystem(system, cur)
        local_I = [cur.index(i) for i in prev]
        gens = minimal_generating_set(ambient, local_I)
        names = [symbol_str(ambient, g.symbol) for g in gens]
        levels.append({"I": [system.labels[i] for i in prev],
                       "ambient": [system.labels[i] for i in cur],
                       "generators": names, "count": len(names)})
        total += len(names)
    return DevissageChain(system, chain, levels, total)


def standard_chain(system: CoxeterSystem) -> list:
    """The section-4 chain: prefixes of S, with the D_n double-empty start."""
    n = system.rank
    name = system.name or ""
    if name.startswith("D"):
        return [(), ()] + [tuple(range(k)) for k in range(2, n + 1)]
    return [tuple(range(k)) for k in range(n + 1)]


# ---------------------------------------------------------------------------
# the greatest I-reduced element and unique writing


def max_I_reduced(system: CoxeterSystem, I) -> CoxElem:
    """b^I = w_I^{-1} w_S, the greatest I-reduced element (finite W)."""
    I = tuple(sorted(set(I)))
    wS = longest_element(system)
    if not I:
        return wS
    return longest_element(system, I).inv() * wS


def unique_writing(w: CoxElem) -> bool:
    """Whether the lift of w has a single positive writing (reduced word)."""
    return len(w.reduced_words()) == 1


def writings_count(w: CoxElem) -> int:
    return len(w.reduced_words())


# ---------------------------------------------------------------------------
# dihedral conjugation criterion (Lemme "s'*a_b1s*s' inv")


def dihedral_conjugation_test(b: CoxElem, s_prime: int, I) -> Optional[int]:
    """The unique t with b^{-1} s' b in B_{s,t}, i.e. with a type-(2) relation
    conjugating a generator based at b by s'; None when no such t exists.

    Decided at the Coxeter level through the alternating decomposition
    b = b0 (sts..)_i with s' b0 = b0 t.
    """
    system = b.system
    I = tuple(sorted(set(I)))
    if s_prime not in I:
        raise CoxeterError("s' must lie in I")
    found = set()
    for s in range(system.rank):
        for t in range(system.rank):
            if s == t or system.m(s, t) is None:
                continue
            dec = decompose_alternating(b, s, t)
            if dec is None:
                continue
            b0, x, y, i = dec
            # realign the oriented decomposition on the couple (s, t)
            if (x, y) != (s, t) and i > 0:
                continue
            if not is_I_reduced(b0 * system.gen(s), I):
                continue
            if system.gen(s_prime) * b0 == b0 * system.gen(t):
                found.add(t)
    if not found:
        return None
    if len(found) > 1:
        raise CoxeterError(f"ambiguous conjugating generator: {sorted(found)}")
    return found.pop()


# ---------------------------------------------------------------------------
# I-reduced reflections vs the inversion set of w_I w_S


def reflections_vs_nbar_check(system: CoxeterSystem, I,
                              max_length: Optional[int] = None) -> dict:
    """Finite W: {p(b s b~) : b s I-reduced} = nbar(w_I w_S).  Infinite W:
    list the reflections (up to max_length) outside W_I with no I-reduced
    witness b s such that b s b~ is a reduced lift."""
    from .nmap import nbar
    from .coxeter import in_parabolic, reflections

    I = tuple(sorted(set(I)))
    witnessed = {g.reflection() for g in minimal_generating_set(system, I,
                                                                max_length)}
    finite = system._finite is True
    if not finite:
        try:
            finite = system.is_finite()
        except Exception:
            finite = False
    if finite:
        target = nbar(max_I_reduced(system, I))
        return {"finite": True, "equal": witnessed == target,
                "count": len(witnessed),
                "missing": sorted(str(t) for t in target - witnessed),
                "extra": sorted(str(t) for t in witnessed - target)}
    if max_length is None:
        raise CoxeterError("max_length required for an infinite system")
    missing = []
    for r in reflections(system, max_length=max_length):
        t = r.element
        if in_parabolic(t, I) or t in witnessed:
            continue
        missing.append(str(t))
    return {"finite": False, "count": len(witnessed), "missing": sorted(missing)}
