"""Independent regeneration of code sets from their provenance records.

Everything here is deliberately naive and self-contained: bits come from
shifts, row functions are evaluated pointwise in nested arithmetic form,
and codes are assembled with plain loops.  No truth-table vectorization, no
symbolic term algebra, no assembly code shared with the generators.  Exact
agreement between this path and the fast one is a strong check on both.
"""

from __future__ import annotations

import copy

from .constructions import CodeSet
from .gbf import PhaseSequence


def _bits(value: int, width: int, order: str) -> list[int]:
    if order == "lsb":
        return [(value >> i) & 1 for i in range(width)]
    return [(value >> (width - 1 - i)) & 1 for i in range(width)]


def _row_label(index: int, width: int) -> list[int]:
    # Row labels enumerate with the leftmost coordinate slowest.  This is a
    # fixed ordering convention, not tied to the index bit convention.
    return [(index >> (width - 1 - pos)) & 1 for pos in range(width)]


# ---------------------------------------------------------------------------
# binary family


def _seed_eval(doc: dict, point: list[int]) -> int:
    """The binary seed function at one point, patches kept in nested form."""
    m1 = doc["m1"]
    total = doc["d"]
    for i, j, w in doc["quadratic"]:
        total += w * point[i] * point[j]
    for i, di in enumerate(doc["d_vec"]):
        total += di * point[i]
    v1, v2, v3, v4 = m1 - 1, m1 - 2, m1 - 3, m1 - 4
    b1 = doc["beta1"]
    t = point
    alpha = (1 - t[v1]) * ((1 - t[v4]) * (t[v3] + t[v2]) + t[v2] * t[v3])
    beta = t[b1] * (
        (1 - t[v1]) * (t[v2] * (1 - t[v3]) * (1 - t[v4]) + t[v2] * t[v3])
        + t[v1] * (1 - t[v2]) * (1 - t[v3])
    )
    return total + alpha + beta


def _g_phase(doc: dict, a: list[int], nb: list[int], index: int, order: str) -> int:
    point = _bits(index, doc["m1"], order)
    total = _seed_eval(doc, point)
    for pos, vertex in enumerate(doc["deleted"]):
        total += (a[pos] + nb[pos]) * point[vertex]
    total += a[-1] * point[doc["pair_end"]]
    return total % 2


def _s_phase(doc: dict, a: list[int], nb: list[int], index: int, order: str) -> int:
    point = _bits(index, doc["m1"], order)
    total = _seed_eval(doc, [1 - b for b in point])
    for pos, vertex in enumerate(doc["deleted"]):
        total += (a[pos] + nb[pos]) * (1 - point[vertex])
    total += (1 - a[-1]) * point[doc["pair_end"]]
    return total % 2


def _binary_row_tables(doc: dict, order: str):
    """Per (n, row): the prefix phases of g and suffix phases of s."""
    m1 = doc["m1"]
    gamma = (1 << (m1 - 1)) + (1 << (m1 - 3))
    full = 1 << m1
    k = len(doc["deleted"])
    prefixes, suffixes = [], []
    for n in range(1 << k):
        nb = _bits(n, k, order)
        pn, sn = [], []
        for row in range(1 << (k + 1)):
            a = _row_label(row, k + 1)
            pn.append([_g_phase(doc, a, nb, t, order) for t in range(gamma)])
            sn.append([_s_phase(doc, a, nb, full - gamma + t, order) for t in range(gamma)])
        prefixes.append(pn)
        suffixes.append(sn)
    return gamma, k, prefixes, suffixes


def _regen_lemma1(doc: dict, order: str):
    gamma, k, prefixes, suffixes = _binary_row_tables(doc, order)
    codes = []
    for pn in prefixes:
        codes.append(tuple(PhaseSequence(2, tuple(row)) for row in pn))
    for sn in suffixes:
        codes.append(tuple(PhaseSequence(2, tuple((-p) % 2 for p in row)) for row in sn))
    m = 1 << (k + 1)
    return 2, m, m, gamma, gamma, tuple(codes)


def _parity(c: list[int], block: int, l: int, order: str) -> int:
    rb = _bits(block, l, order)
    return sum(ci * bi for ci, bi in zip(c, rb)) % 2


def _regen_thm1(doc: dict, order: str):
    gamma, k, prefixes, suffixes = _binary_row_tables(doc, order)
    l, blocks = doc["l"], doc["R"]
    front, back = [], []
    for n in range(1 << k):
        for c in doc["s_r"]:
            pars = [_parity(c, rr, l, order) for rr in range(blocks)]
            rows_f, rows_b = [], []
            for row in range(1 << (k + 1)):
                chained = []
                for par in pars:
                    chained.extend((p + par) % 2 for p in prefixes[n][row])
                rows_f.append(PhaseSequence(2, tuple(chained)))
                chained = []
                for par in pars:
                    chained.extend((-(p + par)) % 2 for p in suffixes[n][row])
                rows_b.append(PhaseSequence(2, tuple(chained)))
            front.append(tuple(rows_f))
            back.append(tuple(rows_b))
    n_rows = 1 << (k + 1)
    return 2, blocks * n_rows, n_rows, blocks * gamma, gamma, tuple(front + back)


def _regen_thm3(doc: dict, order: str):
    gamma, k, prefixes, suffixes = _binary_row_tables(doc, order)
    codes = []
    for pn in prefixes:
        rows = []
        for row in pn:
            flipped = [(p + 1) % 2 for p in row]
            rows.append(PhaseSequence(2, tuple(row + row + flipped)))
        codes.append(tuple(rows))
    for sn in suffixes:
        rows = []
        for row in sn:
            conj = [(-p) % 2 for p in row]
            conj_flipped = [(-(p + 1)) % 2 for p in row]
            rows.append(PhaseSequence(2, tuple(conj + conj + conj_flipped)))
        codes.append(tuple(rows))
    m = 1 << (k + 1)
    return 2, m, m, 3 * gamma, 2 * gamma, tuple(codes)


# ---------------------------------------------------------------------------
# q-ary family


def _terms_eval(doc: dict, point: list[int]) -> int:
    total = 0
    for term in doc["f_terms"]:
        prod = term["coefficient"]
        for var, complemented in term["literals"]:
            prod *= (1 - point[var]) if complemented else point[var]
        total += prod
    return total


def _f_phase(doc: dict, a: list[int], nb: list[int], index: int, order: str) -> int:
    q = doc["q"]
    point = _bits(index, doc["m2"], order)
    total = _terms_eval(doc, point)
    for pos, vertex in enumerate(doc["deleted"]):
        total += (q // 2) * (a[pos] + nb[pos]) * point[vertex]
    total += (q // 2) * a[-1] * point[doc["beta1"]]
    return total % q


def _h_phase(doc: dict, a: list[int], nb: list[int], index: int, order: str) -> int:
    q = doc["q"]
    point = _bits(index, doc["m2"], order)
    total = _terms_eval(doc, [1 - b for b in point])
    for pos, vertex in enumerate(doc["deleted"]):
        total += (q // 2) * (a[pos] + nb[pos]) * (1 - point[vertex])
    total += (q // 2) * (1 - a[-1]) * point[doc["beta1"]]
    return total % q


def _qary_row_tables(doc: dict, order: str):
    length = 1 << doc["m2"]
    k = len(doc["deleted"])
    f_tabs, h_tabs = [], []
    for n in range(1 << k):
        nb = _bits(n, k, order)
        fn, hn = [], []
        for row in range(1 << (k + 1)):
            a = _row_label(row, k + 1)
            fn.append([_f_phase(doc, a, nb, t, order) for t in range(length)])
            hn.append([_h_phase(doc, a, nb, t, order) for t in range(length)])
        f_tabs.append(fn)
        h_tabs.append(hn)
    return length, k, f_tabs, h_tabs


def _regen_lemma2(doc: dict, order: str):
    q = doc["q"]
    length, k, f_tabs, h_tabs = _qary_row_tables(doc, order)
    codes = []
    for fn in f_tabs:
        codes.append(tuple(PhaseSequence(q, tuple(row)) for row in fn))
    for hn in h_tabs:
        codes.append(tuple(PhaseSequence(q, tuple((-p) % q for p in row)) for row in hn))
    m = 1 << (k + 1)
    return q, m, m, length, length, tuple(codes)


def _regen_thm2(doc: dict, order: str):
    q = doc["q"]
    length, k, f_tabs, h_tabs = _qary_row_tables(doc, order)
    l, blocks = doc["l"], doc["R"]
    half = q // 2
    front, back = [], []
    for n in range(1 << k):
        for c in doc["s_r"]:
            pars = [_parity(c, rr, l, order) for rr in range(blocks)]
            rows_f, rows_b = [], []
            for row in range(1 << (k + 1)):
                chained = []
                for par in pars:
                    chained.extend((p + half * par) % q for p in f_tabs[n][row])
                rows_f.append(PhaseSequence(q, tuple(chained)))
                chained = []
                for par in pars:
                    chained.extend((-(p + half * par)) % q for p in h_tabs[n][row])
                rows_b.append(PhaseSequence(q, tuple(chained)))
            front.append(tuple(rows_f))
            back.append(tuple(rows_b))
    n_rows = 1 << (k + 1)
    return q, blocks * n_rows, n_rows, blocks * length, length, tuple(front + back)


_BUILDERS = {
    "lemma1": _regen_lemma1,
    "thm1": _regen_thm1,
    "thm3": _regen_thm3,
    "lemma2": _regen_lemma2,
    "thm2": _regen_thm2,
}


def oracle_regenerate(code_set: CodeSet) -> CodeSet:
    """Rebuild a code set from its provenance alone, the slow way.

    The result carries a copy of the provenance, so a faithful generator
    satisfies oracle_regenerate(cs) == cs.  Raises ValueError when the set
    has no provenance or names an unknown construction.
    """
    prov = code_set.provenance
    if not prov:
        raise ValueError("code set carries no provenance to regenerate from")
    try:
        construction = prov["construction"]
        order = prov["bit_order"]
        doc = prov["parameters"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"provenance record is incomplete: {exc}") from exc
    builder = _BUILDERS.get(construction)
    if builder is None:
        raise ValueError(f"unknown construction {construction!r}")
    if order not in ("lsb", "msb"):
        raise ValueError(f"unknown bit order {order!r}")
    q, set_size, code_size, length, zcz, codes = builder(doc, order)
    return CodeSet(
        q=q,
        set_size=set_size,
        code_size=code_size,
        length=length,
        zcz=zcz,
        codes=codes,
        provenance=copy.deepcopy(prov),
    )


def phase_mismatches(first: CodeSet, second: CodeSet) -> list[tuple[int, int, int]]:
    """(code, row, position) triples where two same-shaped sets disagree."""
    if first.dims != second.dims or first.q != second.q:
        raise ValueError(f"shape mismatch: {first.q}-ary {first.dims} vs {second.q}-ary {second.dims}")
    out = []
    for ci, (ca, cb) in enumerate(zip(first.codes, second.codes)):
        for ri, (sa, sb) in enumerate(zip(ca, cb)):
            for pi, (pa, pb) in enumerate(zip(sa.phases, sb.phases)):
                if pa != pb:
                    out.append((ci, ri, pi))
    return out
