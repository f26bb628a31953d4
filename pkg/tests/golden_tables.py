"""Expected presentations of D_I for the classified families.

Each golden_* function returns (system, I, generators, relations) built
directly from the closed-form tables: conjugation relations s X s^-1 = Y
plus the braid relations among I.  Comparisons are made through canonical
relators, so the syntactic shape of either side is irrelevant.
"""

from purebraid.coxeter import named_system
from purebraid.schreier import canonical_relator, cox_symbol, pure_symbol


def conj_rel(s_sym, xs, ys):
    """The relation s x1..xk s^-1 = y1..yk over presentation symbols."""
    lhs = ((s_sym, 1),) + tuple((x, 1) for x in xs) + ((s_sym, -1),)
    rhs = tuple((y, 1) for y in ys)
    return (lhs, rhs)


def braid_rel(system, i, j):
    m = system.m(i, j)
    lhs = tuple((cox_symbol(i if k % 2 == 0 else j), 1) for k in range(m))
    rhs = tuple((cox_symbol(j if k % 2 == 0 else i), 1) for k in range(m))
    return (lhs, rhs)


def relator_set(relations):
    return frozenset(canonical_relator(u, v) for u, v in relations) - {()}


def golden_A(n):
    """A_n with I = {s1..s_{n-1}}: generators a_1..a_n."""
    system = named_system(f"A{n}")
    I = tuple(range(n - 1))

    def a(i):  # a_i = a_{s_n..s_{i+1}, s_i}
        base = system.normal_form(tuple(range(n - 1, i - 1, -1)))
        return pure_symbol(base, i - 1)

    gens = [cox_symbol(i) for i in I] + [a(i) for i in range(1, n + 1)]
    rels = [braid_rel(system, i, j) for i in I for j in I if i < j]
    for j in range(1, n):
        for i in range(1, n + 1):
            if i not in (j, j + 1):
                rels.append(conj_rel(cox_symbol(j - 1), [a(i)], [a(i)]))
    for i in range(1, n):
        rels.append(conj_rel(cox_symbol(i - 1), [a(i)], [a(i + 1)]))
        rels.append(conj_rel(cox_symbol(i - 1), [a(i), a(i + 1)], [a(i), a(i + 1)]))
    return system, I, gens, rels


def golden_B(n):
    """B_n with I = {s1..s_{n-1}}: generators a_1..a_n, b_2..b_n."""
    system = named_system(f"B{n}")
    I = tuple(range(n - 1))

    def a(i):
        base = system.normal_form(tuple(range(n - 1, i - 1, -1)))
        return pure_symbol(base, i - 1)

    def b(i):  # b_i = a_{s_n..s_1 s_2..s_{i-1}, s_i}
        word = tuple(range(n - 1, -1, -1)) + tuple(range(1, i - 1))
        return pure_symbol(system.normal_form(word), i - 1)

    gens = [cox_symbol(i) for i in I] + [a(i) for i in range(1, n + 1)] \
        + [b(i) for i in range(2, n + 1)]
    rels = [braid_rel(system, i, j) for i in I for j in I if i < j]
    for j in range(1, n):
        for i in range(1, n + 1):
            if i not in (j, j + 1):
                rels.append(conj_rel(cox_symbol(j - 1), [a(i)], [a(i)]))
        for i in range(2, n + 1):
            if i not in (j, j + 1):
                rels.append(conj_rel(cox_symbol(j - 1), [b(i)], [b(i)]))
    for i in range(2, n):
        rels.append(conj_rel(cox_symbol(i - 1), [a(i)], [a(i + 1)]))
        rels.append(conj_rel(cox_symbol(i - 1), [a(i), a(i + 1)], [a(i), a(i + 1)]))
    for i in range(2, n):
        rels.append(conj_rel(cox_symbol(i - 1), [b(i + 1)], [b(i)]))
        rels.append(conj_rel(cox_symbol(i - 1), [b(i + 1), b(i)], [b(i + 1), b(i)]))
    s1 = cox_symbol(0)
    rels.append(conj_rel(s1, [b(2)], [a(2)]))
    rels.append(conj_rel(s1, [b(2), a(1)], [a(1), a(2)]))
    rels.append(conj_rel(s1, [b(2), a(1), a(2)], [b(2), a(1), a(2)]))
    return system, I, gens, rels


def golden_I2(m):
    """I2(m) with I = {s}: generators a_1..a_{m-1}."""
    system = named_system(f"I2({m})")
    I = (0,)

    def a(i):  # a_i based at the alternating prefix t s t .. of length i-1
        word = tuple(1 if k % 2 == 0 else 0 for k in range(i - 1))
        return pure_symbol(system.normal_form(word), 1 if i % 2 == 1 else 0)

    gens = [cox_symbol(0)] + [a(i) for i in range(1, m)]
    rels = []
    for i in range(1, m):
        xs = [a(k) for k in range(m - 1, m - 1 - i, -1)]
        ys = [a(k) for k in range(i, 0, -1)]
        rels.append(conj_rel(cox_symbol(0), xs, ys))
    return system, I, gens, rels


def golden_D4():
    """D_4 with I = {s2, s2', s3}.

    Returns (system, I, generators, identifications, relations): the two
    identified doubles of a_2 and a_2' are listed separately, and the
    relations are written purely in the a/b symbols (the table after
    substituting the identifications).
    """
    system = named_system("D4")
    I = (0, 1, 2)
    nf = system.normal_form
    s2, s2p, s3 = cox_symbol(0), cox_symbol(1), cox_symbol(2)
    a2 = pure_symbol(nf((3, 2)), 0)
    a2p = pure_symbol(nf((3, 2)), 1)
    a3 = pure_symbol(nf((3,)), 2)
    a4 = pure_symbol(nf(()), 3)
    b3 = pure_symbol(nf((3, 2, 0, 1)), 2)
    b4 = pure_symbol(nf((3, 2, 0, 1, 2)), 3)
    e2 = pure_symbol(nf((3, 2, 1)), 0)   # a_{s4 s3 s2', s2}, identified with a2
    e2p = pure_symbol(nf((3, 2, 0)), 1)  # a_{s4 s3 s2, s2'}, identified with a2'
    gens = [s2, s2p, s3, a2, a2p, a3, a4, b3, b4, e2, e2p]
    identifications = [(e2, a2), (e2p, a2p)]
    rels = [braid_rel(system, 0, 1), braid_rel(system, 0, 2),
            braid_rel(system, 1, 2),
            (((a2, 1), (a2p, 1)), ((a2p, 1), (a2, 1)))]
    rels += [conj_rel(s2, [a4], [a4]), conj_rel(s2p, [a4], [a4]),
             conj_rel(s3, [a2], [a2]), conj_rel(s3, [a2p], [a2p]),
             conj_rel(s2, [a2], [a3]), conj_rel(s2p, [a2p], [a3]),
             conj_rel(s3, [a3], [a4]),
             conj_rel(s2, [a2, a3], [a2, a3]),
             conj_rel(s2p, [a2p, a3], [a2p, a3]),
             conj_rel(s3, [a3, a4], [a3, a4]),
             conj_rel(s2, [b4], [b4]), conj_rel(s2p, [b4], [b4]),
             conj_rel(s3, [b4], [b3]),
             conj_rel(s3, [b4, b3], [b4, b3]),
             conj_rel(s2, [b3], [a2p]),
             conj_rel(s2, [b3, a2p], [b3, a2p]),
             conj_rel(s2p, [b3], [a2]),
             conj_rel(s2p, [b3, a2], [b3, a2])]
    return system, I, gens, identifications, rels


def substitute(word, table):
    """Replace symbols of a presentation word through `table`."""
    return tuple((table.get(sym, sym), e) for sym, e in word)


def check_golden_simple(presentation, gens, rels):
    """Generator sets and canonical relator sets must coincide exactly."""
    assert set(presentation.generators) == set(gens)
    assert len(presentation.generators) == len(gens)
    assert relator_set(presentation.relations) == relator_set(rels)


def check_golden_D4(presentation):
    """D4: identifications present, table matches after substituting them."""
    system, I, gens, identifications, rels = golden_D4()
    assert presentation.system == system and presentation.I == I
    assert set(presentation.generators) == set(gens)
    idents = {canonical_relator((((e, 1),)), (((a, 1),)))
              for e, a in identifications}
    actual = relator_set(presentation.relations)
    assert idents <= actual
    table = dict(identifications)
    substituted = relator_set(
        (substitute(u, table), substitute(v, table))
        for u, v in presentation.relations)
    assert substituted == relator_set(rels)
