"""Generators for complementary code sets with zero-correlation zones.

Five related constructions live here.  Two produce complete complementary
codes (every correlation sum vanishes at every nonzero shift): a binary
family seeded by a quadratic form whose graph turns into a path after
deleting k vertices, and a q-ary family with the same graph condition where
every surviving edge must carry weight q/2.  The other three extend those
seeds to longer codes with a guaranteed zero-correlation zone, either by
chaining sign-modulated blocks (``thm1``, ``thm2``) or by the fixed
three-block pattern (P, P, -P) (``thm3``).

All of them hit the size bound M = N * floor(L / Z), so a clean
verification implies optimality.

Every generator is deterministic: same parameters and bit order, same
CodeSet, bit for bit.  The returned CodeSet carries a provenance dict (plain
JSON-ready values) from which an independent reimplementation can rebuild
the whole set; see the oracle module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any

import numpy as np

from .gbf import (
    GBF,
    PhaseSequence,
    Term,
    index_to_bits,
    resolve_bit_order,
    substitute_complement,
    truth_table,
    z,
    zbar,
)
from .graphs import PathCertificate, graph_of_quadratic, validate_deletion_path


@dataclass(frozen=True)
class CodeSet:
    """set_size codes, each holding code_size sequences of equal length.

    zcz is the declared zero-correlation zone width: the claim under test,
    not a measured quantity.  For complete complementary codes it equals the
    sequence length.  provenance, when present, is a JSON-ready description
    sufficient to regenerate the set from scratch.
    """

    q: int
    set_size: int
    code_size: int
    length: int
    zcz: int
    codes: tuple[tuple[PhaseSequence, ...], ...]
    provenance: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if min(self.set_size, self.code_size, self.length) < 1:
            raise ValueError("set size, code size, and length must all be positive")
        if not 1 <= self.zcz <= self.length:
            raise ValueError(f"declared zone {self.zcz} out of range [1, {self.length}]")
        if len(self.codes) != self.set_size:
            raise ValueError(f"expected {self.set_size} codes, got {len(self.codes)}")
        for ci, code in enumerate(self.codes):
            if len(code) != self.code_size:
                raise ValueError(f"code {ci} has {len(code)} sequences, expected {self.code_size}")
            for seq in code:
                if seq.q != self.q:
                    raise ValueError(f"code {ci} mixes moduli: {seq.q} vs {self.q}")
                if len(seq) != self.length:
                    raise ValueError(f"code {ci} has a length-{len(seq)} sequence, expected {self.length}")

    @property
    def dims(self) -> tuple[int, int, int, int]:
        """(M, N, L, Z): set size, code size, length, declared zone."""
        return (self.set_size, self.code_size, self.length, self.zcz)


def _check_binary_entries(values, what: str) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if v not in (0, 1):
            raise ValueError(f"{what} entries must be 0 or 1, got {v}")
    return out


@dataclass(frozen=True)
class Lemma1Params:
    """Inputs for the binary seed construction (modulus fixed at 2).

    quadratic is a strictly degree-2 GBF over the low m1 - 4 variables; the
    linear and constant freedom lives in d_vec and d.  deleted names the
    graph vertices removed before the path test, and beta1 picks one end of
    the surviving path (None takes the smallest).  Validation runs the path
    test once and keeps the certificate on .path.

    The two path ends play different roles.  beta1 is wired into the high
    four variables by the seed's patch terms, which makes it an interior
    vertex of the effective chain; the row offsets therefore toggle the
    opposite end (.pair_end).  On a single-vertex path the two coincide.
    Toggling beta1 instead breaks the correlation zone as soon as the path
    has an edge.
    """

    m1: int
    quadratic: GBF
    d_vec: tuple[int, ...]
    d: int = 0
    deleted: tuple[int, ...] = ()
    beta1: int | None = None

    def __post_init__(self) -> None:
        if self.m1 < 5:
            raise ValueError(f"need m1 >= 5, got {self.m1}")
        nvars = self.m1 - 4
        if self.quadratic.m != nvars:
            raise ValueError(
                f"quadratic form must use {nvars} variables for m1={self.m1}, "
                f"got {self.quadratic.m}"
            )
        if self.quadratic.q != 2:
            raise ValueError(f"quadratic form must be over modulus 2, got {self.quadratic.q}")
        for t in self.quadratic.terms:
            if t.degree != 2:
                raise ValueError(
                    "quadratic form must be homogeneous of degree 2; "
                    "put linear terms in d_vec and the constant in d"
                )
        object.__setattr__(self, "d_vec", _check_binary_entries(self.d_vec, "d_vec"))
        if len(self.d_vec) != nvars:
            raise ValueError(f"d_vec must have {nvars} entries, got {len(self.d_vec)}")
        if self.d not in (0, 1):
            raise ValueError(f"d must be 0 or 1, got {self.d}")
        object.__setattr__(self, "deleted", tuple(sorted(int(v) for v in self.deleted)))
        cert = validate_deletion_path(graph_of_quadratic(self.quadratic), self.deleted)
        beta1 = cert.end_vertices[0] if self.beta1 is None else int(self.beta1)
        if beta1 not in cert.end_vertices:
            raise ValueError(
                f"beta1={beta1} is not an end of the residual path; choices: {cert.end_vertices}"
            )
        object.__setattr__(self, "beta1", beta1)
        object.__setattr__(self, "_cert", cert)

    @property
    def path(self) -> PathCertificate:
        return self._cert

    @property
    def pair_end(self) -> int:
        """The path end opposite beta1; row offsets toggle this vertex."""
        ends = self.path.end_vertices
        if len(ends) == 1:
            return ends[0]
        return ends[1] if self.beta1 == ends[0] else ends[0]

    @property
    def k(self) -> int:
        return len(self.deleted)

    @property
    def gamma(self) -> int:
        """Truncation length (1 << (m1 - 1)) + (1 << (m1 - 3))."""
        return (1 << (self.m1 - 1)) + (1 << (self.m1 - 3))


def _check_block_choice(l: int, r: int, s_r) -> tuple[tuple[int, ...], ...] | None:
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    if r < 2 or r % 2 != 0:
        raise ValueError(f"block count R must be even and at least 2, got {r}")
    if r > (1 << l):
        raise ValueError(f"block count R={r} exceeds 2^l={1 << l}")
    if s_r is None:
        return None
    chosen = tuple(_check_binary_entries(c, "s_r") for c in s_r)
    for c in chosen:
        if len(c) != l:
            raise ValueError(f"s_r vectors must have length l={l}, got {c}")
    if len(set(chosen)) != len(chosen):
        raise ValueError("s_r vectors must be distinct")
    if len(chosen) != r:
        raise ValueError(f"s_r must contain exactly R={r} vectors, got {len(chosen)}")
    return chosen


@dataclass(frozen=True)
class Theorem1Params:
    """Binary block-chained extension of the seed construction.

    Each code chains R copies of a seed sequence, block r sign-flipped by
    the parity <c, bits(r)>; the label c runs over s_r.  s_r=None defers to
    the default choice, the first R length-l vectors in ascending integer
    order under the active bit convention.  Beware: the zone property needs
    sum over blocks of (-1)^{<c xor c', bits(r)>} to vanish for every pair
    of distinct labels.  The default satisfies this whenever R is a power
    of two; an arbitrary choice may not, and verification will say so.
    """

    base: Lemma1Params
    l: int
    r: int
    s_r: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_r", _check_block_choice(self.l, self.r, self.s_r))

    def resolved_s_r(self, order: str | None = None) -> tuple[tuple[int, ...], ...]:
        if self.s_r is not None:
            return self.s_r
        return tuple(index_to_bits(v, self.l, order) for v in range(self.r))


@dataclass(frozen=True)
class Lemma2Params:
    """Inputs for the q-ary seed construction.

    f may carry any linear and constant terms, but its quadratic part must
    turn into a path after deleting the chosen vertices, with every
    surviving edge weighted exactly q/2.
    """

    q: int
    m2: int
    f: GBF
    deleted: tuple[int, ...] = ()
    beta1: int | None = None

    def __post_init__(self) -> None:
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError(f"modulus must be even and at least 2, got {self.q}")
        if self.m2 < 1:
            raise ValueError(f"need m2 >= 1, got {self.m2}")
        if self.f.m != self.m2 or self.f.q != self.q:
            raise ValueError(
                f"f must map {{0,1}}^{self.m2} into Z_{self.q}, "
                f"got m={self.f.m}, q={self.f.q}"
            )
        object.__setattr__(self, "deleted", tuple(sorted(int(v) for v in self.deleted)))
        cert = validate_deletion_path(
            graph_of_quadratic(self.f), self.deleted, required_weight=self.q // 2
        )
        beta1 = cert.end_vertices[0] if self.beta1 is None else int(self.beta1)
        if beta1 not in cert.end_vertices:
            raise ValueError(
                f"beta1={beta1} is not an end of the residual path; choices: {cert.end_vertices}"
            )
        object.__setattr__(self, "beta1", beta1)
        object.__setattr__(self, "_cert", cert)

    @property
    def path(self) -> PathCertificate:
        return self._cert

    @property
    def k(self) -> int:
        return len(self.deleted)


@dataclass(frozen=True)
class Theorem2Params:
    """q-ary block-chained extension; block multipliers are still just signs.

    The same caveat as the binary variant applies to explicit s_r choices.
    """

    base: Lemma2Params
    l: int
    r: int
    s_r: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_r", _check_block_choice(self.l, self.r, self.s_r))

    def resolved_s_r(self, order: str | None = None) -> tuple[tuple[int, ...], ...]:
        if self.s_r is not None:
            return self.s_r
        return tuple(index_to_bits(v, self.l, order) for v in range(self.r))


# ---------------------------------------------------------------------------
# seed functions


def build_g(params: Lemma1Params) -> GBF:
    """Seed GBF over m1 variables: quadratic core, linear part, and two
    patch products around the top four variables that make the length-gamma
    prefix behave.
    """
    m1 = params.m1
    v1, v2, v3, v4 = m1 - 1, m1 - 2, m1 - 3, m1 - 4
    b = params.beta1
    terms = [Term(params.d)]
    terms += [Term(di, (z(i),)) for i, di in enumerate(params.d_vec)]
    terms += [
        Term(1, (zbar(v1), zbar(v4), z(v3))),
        Term(1, (zbar(v1), zbar(v4), z(v2))),
        Term(1, (zbar(v1), z(v2), z(v3))),
        Term(1, (z(b), zbar(v1), z(v2), zbar(v3), zbar(v4))),
        Term(1, (z(b), zbar(v1), z(v2), z(v3))),
        Term(1, (z(b), z(v1), zbar(v2), zbar(v3))),
    ]
    core = GBF(m1, 2, tuple(Term(t.coefficient, t.literals) for t in params.quadratic.terms))
    return core + GBF(m1, 2, tuple(terms))


def _check_row_labels(k: int, a_vec, n: int) -> tuple[int, ...]:
    a = _check_binary_entries(a_vec, "a_vec")
    if len(a) != k + 1:
        raise ValueError(f"a_vec must have {k + 1} entries, got {len(a)}")
    if not 0 <= n < (1 << k):
        raise ValueError(f"n={n} out of range for k={k}")
    return a


def build_g_an(g: GBF, params: Lemma1Params, a_vec, n: int, bit_order: str | None = None) -> GBF:
    """Row function: g plus (a_i + n_i) z_{p_i} over deleted vertices plus
    a z on the pair end (the path end the patch terms leave free)."""
    a = _check_row_labels(params.k, a_vec, n)
    n_bits = index_to_bits(n, params.k, bit_order)
    terms = [Term(ai + ni, (z(p),)) for p, ai, ni in zip(params.deleted, a, n_bits)]
    terms.append(Term(a[-1], (z(params.pair_end),)))
    return g + GBF(params.m1, 2, tuple(terms))


def build_s_an(g: GBF, params: Lemma1Params, a_vec, n: int, bit_order: str | None = None) -> GBF:
    """Partner row function: complement-substituted g, complemented offsets,
    and the flipped tail coefficient (1 - a) on the pair end."""
    a = _check_row_labels(params.k, a_vec, n)
    n_bits = index_to_bits(n, params.k, bit_order)
    terms = [Term(ai + ni, (zbar(p),)) for p, ai, ni in zip(params.deleted, a, n_bits)]
    terms.append(Term(1 - a[-1], (z(params.pair_end),)))
    return substitute_complement(g) + GBF(params.m1, 2, tuple(terms))


def build_f_an(params: Lemma2Params, a_vec, n: int, bit_order: str | None = None) -> GBF:
    """q-ary row function: f plus (q/2)-weighted offsets on the deleted
    vertices and on z_{beta1}."""
    a = _check_row_labels(params.k, a_vec, n)
    n_bits = index_to_bits(n, params.k, bit_order)
    half = params.q // 2
    terms = [Term(half * (ai + ni), (z(p),)) for p, ai, ni in zip(params.deleted, a, n_bits)]
    terms.append(Term(half * a[-1], (z(params.beta1),)))
    return params.f + GBF(params.m2, params.q, tuple(terms))


def build_h_an(params: Lemma2Params, a_vec, n: int, bit_order: str | None = None) -> GBF:
    a = _check_row_labels(params.k, a_vec, n)
    n_bits = index_to_bits(n, params.k, bit_order)
    half = params.q // 2
    terms = [Term(half * (ai + ni), (zbar(p),)) for p, ai, ni in zip(params.deleted, a, n_bits)]
    terms.append(Term(half * (1 - a[-1]), (z(params.beta1),)))
    return substitute_complement(params.f) + GBF(params.m2, params.q, tuple(terms))


# ---------------------------------------------------------------------------
# assembly helpers

# Row order within every code: a-vectors in lexicographic order, last
# coordinate fastest.  This is a fixed convention independent of bit order.


def _a_vectors(width: int):
    return tuple(itertools.product((0, 1), repeat=width))


def _phase_seq(q: int, table: np.ndarray) -> PhaseSequence:
    return PhaseSequence(q, tuple(int(v) for v in table))


def _lemma1_tables(params: Lemma1Params, order: str):
    """Truth-table prefixes of g^{a,n} and suffixes of s^{a,n}, per (n, a)."""
    g = build_g(params)
    gamma = params.gamma
    full = 1 << params.m1
    prefixes, suffixes = [], []
    for n in range(1 << params.k):
        pn, sn = [], []
        for a_vec in _a_vectors(params.k + 1):
            pn.append(truth_table(build_g_an(g, params, a_vec, n, order), order)[:gamma])
            sn.append(truth_table(build_s_an(g, params, a_vec, n, order), order)[full - gamma:])
        prefixes.append(pn)
        suffixes.append(sn)
    return prefixes, suffixes


def _lemma2_tables(params: Lemma2Params, order: str):
    """Full truth tables of f^{a,n} and h^{a,n}, per (n, a)."""
    f_tabs, h_tabs = [], []
    for n in range(1 << params.k):
        fn, hn = [], []
        for a_vec in _a_vectors(params.k + 1):
            fn.append(truth_table(build_f_an(params, a_vec, n, order), order))
            hn.append(truth_table(build_h_an(params, a_vec, n, order), order))
        f_tabs.append(fn)
        h_tabs.append(hn)
    return f_tabs, h_tabs


def _block_parities(s_r, r: int, l: int, order: str) -> dict[tuple[int, ...], list[int]]:
    out = {}
    for c in s_r:
        bits = [index_to_bits(rr, l, order) for rr in range(r)]
        out[c] = [sum(ci * bi for ci, bi in zip(c, rb)) % 2 for rb in bits]
    return out


def _provenance(construction: str, order: str, parameters: dict) -> dict:
    return {"construction": construction, "bit_order": order, "parameters": parameters}


def _lemma1_doc(p: Lemma1Params) -> dict:
    return {
        "m1": p.m1,
        "quadratic": [[i, j, w] for i, j, w in graph_of_quadratic(p.quadratic).edges],
        "d_vec": [int(v) for v in p.d_vec],
        "d": int(p.d),
        "deleted": [int(v) for v in p.deleted],
        "beta1": int(p.beta1),
        "pair_end": int(p.pair_end),
    }


def _lemma2_doc(p: Lemma2Params) -> dict:
    return {
        "q": p.q,
        "m2": p.m2,
        "f_terms": [
            {
                "coefficient": int(t.coefficient),
                "literals": [[l.var_index, bool(l.complemented)] for l in t.literals],
            }
            for t in p.f.terms
        ],
        "deleted": [int(v) for v in p.deleted],
        "beta1": int(p.beta1),
    }


def _block_doc(base_doc: dict, l: int, r: int, s_r) -> dict:
    doc = dict(base_doc)
    doc["l"] = int(l)
    doc["R"] = int(r)
    doc["s_r"] = [[int(b) for b in c] for c in s_r]
    return doc


# ---------------------------------------------------------------------------
# generators


def lemma1_ccc(params: Lemma1Params, bit_order: str | None = None) -> CodeSet:
    """Binary complete complementary code of 2^(k+1) codes, length gamma.

    Codes are ordered: the prefix family for n = 0..2^k-1, then the
    conjugated suffix family for the same n range.
    """
    order = resolve_bit_order(bit_order)
    prefixes, suffixes = _lemma1_tables(params, order)
    codes = []
    for n in range(1 << params.k):
        codes.append(tuple(_phase_seq(2, t) for t in prefixes[n]))
    for n in range(1 << params.k):
        codes.append(tuple(_phase_seq(2, (-t) % 2) for t in suffixes[n]))
    m = 1 << (params.k + 1)
    return CodeSet(
        q=2,
        set_size=m,
        code_size=m,
        length=params.gamma,
        zcz=params.gamma,
        codes=tuple(codes),
        provenance=_provenance("lemma1", order, _lemma1_doc(params)),
    )


def theorem1_zccs(params: Theorem1Params, bit_order: str | None = None) -> CodeSet:
    """Binary (R 2^(k+1), 2^(k+1), R gamma, gamma) zero-zone set.

    Code order: all block-chained prefix codes (n-major, then s_r order),
    followed by the conjugated suffix codes in the same order.
    """
    order = resolve_bit_order(bit_order)
    base = params.base
    s_r = params.resolved_s_r(order)
    prefixes, suffixes = _lemma1_tables(base, order)
    parities = _block_parities(s_r, params.r, params.l, order)
    gamma = base.gamma

    front, back = [], []
    for n in range(1 << base.k):
        for c in s_r:
            ps = parities[c]
            front.append(
                tuple(
                    _phase_seq(2, np.concatenate([(t + ps[rr]) % 2 for rr in range(params.r)]))
                    for t in prefixes[n]
                )
            )
            back.append(
                tuple(
                    _phase_seq(2, (-np.concatenate([(t + ps[rr]) % 2 for rr in range(params.r)])) % 2)
                    for t in suffixes[n]
                )
            )
    n_rows = 1 << (base.k + 1)
    return CodeSet(
        q=2,
        set_size=params.r * n_rows,
        code_size=n_rows,
        length=params.r * gamma,
        zcz=gamma,
        codes=tuple(front + back),
        provenance=_provenance("thm1", order, _block_doc(_lemma1_doc(base), params.l, params.r, s_r)),
    )


def theorem3_zccs(params: Lemma1Params, bit_order: str | None = None) -> CodeSet:
    """Binary (2^(k+1), 2^(k+1), 3 gamma, 2 gamma) zero-zone set.

    Each row is the three-block pattern (P, P, -P) over a seed prefix, or
    the conjugate of that pattern over a seed suffix.
    """
    order = resolve_bit_order(bit_order)
    prefixes, suffixes = _lemma1_tables(params, order)
    codes = []
    for n in range(1 << params.k):
        codes.append(
            tuple(_phase_seq(2, np.concatenate([t, t, (t + 1) % 2])) for t in prefixes[n])
        )
    for n in range(1 << params.k):
        codes.append(
            tuple(
                _phase_seq(2, (-np.concatenate([t, t, (t + 1) % 2])) % 2) for t in suffixes[n]
            )
        )
    m = 1 << (params.k + 1)
    return CodeSet(
        q=2,
        set_size=m,
        code_size=m,
        length=3 * params.gamma,
        zcz=2 * params.gamma,
        codes=tuple(codes),
        provenance=_provenance("thm3", order, _lemma1_doc(params)),
    )


def lemma2_ccc(params: Lemma2Params, bit_order: str | None = None) -> CodeSet:
    """q-ary complete complementary code of 2^(k+1) codes, length 2^m2."""
    order = resolve_bit_order(bit_order)
    f_tabs, h_tabs = _lemma2_tables(params, order)
    q = params.q
    codes = []
    for n in range(1 << params.k):
        codes.append(tuple(_phase_seq(q, t) for t in f_tabs[n]))
    for n in range(1 << params.k):
        codes.append(tuple(_phase_seq(q, (-t) % q) for t in h_tabs[n]))
    m = 1 << (params.k + 1)
    return CodeSet(
        q=q,
        set_size=m,
        code_size=m,
        length=1 << params.m2,
        zcz=1 << params.m2,
        codes=tuple(codes),
        provenance=_provenance("lemma2", order, _lemma2_doc(params)),
    )


def theorem2_zccs(params: Theorem2Params, bit_order: str | None = None) -> CodeSet:
    """q-ary (R 2^(k+1), 2^(k+1), R 2^m2, 2^m2) zero-zone set."""
    order = resolve_bit_order(bit_order)
    base = params.base
    q = base.q
    half = q // 2
    s_r = params.resolved_s_r(order)
    f_tabs, h_tabs = _lemma2_tables(base, order)
    parities = _block_parities(s_r, params.r, params.l, order)

    front, back = [], []
    for n in range(1 << base.k):
        for c in s_r:
            ps = parities[c]
            front.append(
                tuple(
                    _phase_seq(q, np.concatenate([(t + half * ps[rr]) % q for rr in range(params.r)]))
                    for t in f_tabs[n]
                )
            )
            back.append(
                tuple(
                    _phase_seq(q, (-np.concatenate([(t + half * ps[rr]) % q for rr in range(params.r)])) % q)
                    for t in h_tabs[n]
                )
            )
    n_rows = 1 << (base.k + 1)
    return CodeSet(
        q=q,
        set_size=params.r * n_rows,
        code_size=n_rows,
        length=params.r << base.m2,
        zcz=1 << base.m2,
        codes=tuple(front + back),
        provenance=_provenance("thm2", order, _block_doc(_lemma2_doc(base), params.l, params.r, s_r)),
    )
