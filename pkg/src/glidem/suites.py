"""Verification suites behind the CLI subcommands.

Each suite turns a run configuration into a VerificationReport.  Exhaustive
mode sweeps a finite matrix algebra completely; sampled mode draws seeded
samples over the configured domain.  Independent case sweeps can fan out to
worker processes (WORKBENCH_WORKERS); results are merged in case order, so
reports are identical for every worker count.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable, Sequence

from .centralizers import (
    commutant_basis,
    double_commutant_basis,
    gl_elements,
    in_span,
    involution_elements,
    span_key,
    theorem_c_decide,
)
from .classtwo import (
    centralizer_form_check,
    double_centralizer_structure,
    is_class_two,
    nilpotent_frame,
    sample_class_two,
    witness_u_r,
)
from .deltasets import (
    DeltaSet,
    MINUS,
    PLUS,
    PhiSample,
    all_delta_sets,
    annihilator_invariance_check,
    contains,
    enumerate_delta,
    fixed_space_of_square,
    maximality_check,
    property_a,
    property_b_solve,
    property_c_normalizer,
    property_d_square,
)
from .idempotents import (
    class_members,
    class_offset_basis,
    corner_basis,
    involution_rigidity,
    iota,
    iota_inv,
    plus_minus_space,
)
from .matrices import (
    Mat,
    enumerate_idempotents,
    enumerate_invertibles,
    enumerate_involutions,
    enumerate_matrices,
    enumerate_span,
    enumerate_square_zero,
    mats_commute,
    sample_idempotent,
    sample_invertible,
    sample_involution,
    sample_matrix,
    sample_nilpotent_square_zero,
    similarity_to_projection,
)
from .reports import RunConfig, VerificationReport, run_cases
from .transport import (
    IsoSpec,
    check_minus_one,
    iso_identity,
    iso_inner,
    iso_transpose_inverse,
    orientation,
    theta,
    theta_tilde,
    verify_orientation_propagation,
    verify_theorem_d,
    TransposeInverse,
)

__all__ = [
    "default_workers",
    "run_axioms",
    "run_classtwo",
    "run_delta_b",
    "run_enumerate",
    "run_suite",
    "run_thm_c",
    "run_thm_d",
    "run_witness",
]


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("WORKBENCH_WORKERS", "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: Sequence, workers: int) -> list:
    """Ordered map, optionally fanned out to processes."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    try:
        import concurrent.futures as cf

        chunk = max(1, len(items) // (workers * 4))
        with cf.ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(fn, items, chunksize=chunk))
    except (OSError, ImportError):
        return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# axioms suite: the ring model facts
# ---------------------------------------------------------------------------

def _unit_probes(domain, n: int) -> list[Mat]:
    """Invertibles that only central elements commute with, all of them."""
    one = Mat.identity(domain, n)
    probes = [one + Mat.unit(domain, n, i, j) for i in range(n) for j in range(n) if i != j]
    probes.append(Mat.diag(domain, [domain.coerce(i + 1) for i in range(n)]))
    return probes


def _corner_units(e: Mat, pool: Iterable[Mat]) -> list[Mat]:
    """Elements of the corner algebra eNe invertible inside the corner."""
    one = Mat.identity(e.domain, e.n)
    comp = one - e
    out = []
    seen = set()
    for a in pool:
        x = e * a * e
        if x in seen:
            continue
        seen.add(x)
        if (x + comp).is_invertible():
            out.append(x)
    return out


def _axioms_cases_exhaustive(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n
    one = Mat.identity(domain, n)
    zero = Mat.zeros(domain, n)

    def square_zero_frames():
        count = 0
        for nil in enumerate_square_zero(domain, n):
            frame = nilpotent_frame(nil)  # validates all five identities
            # split form: n = e n f' with f' e = 0 for f' = g
            assert frame.e * nil * frame.g == nil
            assert frame.g * frame.e == zero
            count += 1
        return {"square_zero_elements": count}

    def corner_center():
        checked = 0
        for e in enumerate_idempotents(domain, n):
            basis = corner_basis(e, e)
            if not basis:
                continue
            units = _corner_units(e, enumerate_span(basis))
            for d1 in enumerate_span(basis):
                if all(mats_commute(d1, x) for x in units):
                    assert in_span(d1, [e]) is not None, (
                        f"corner-central {d1!r} is not a multiple of {e!r}"
                    )
                    checked += 1
        return {"corner_central_elements": checked}

    def corner_nondegeneracy():
        vacuous = 0
        checked = 0
        for nil in enumerate_square_zero(domain, n):
            frame = nilpotent_frame(nil)
            e, g, f = frame.e, frame.g, frame.f
            if f.is_zero():
                vacuous += 1
                continue
            fng = corner_basis(f, g)
            enf = corner_basis(e, f)
            fnf = corner_basis(f, f)
            for a3 in enumerate_span(enf):
                if all((a3 * y).is_zero() for y in fng):
                    assert a3.is_zero()
            for a4 in enumerate_span(fnf):
                if all((a4 * y).is_zero() for y in fng):
                    assert a4.is_zero()
            for a5 in enumerate_span(fng):
                if all((y * a5).is_zero() for y in enf):
                    assert a5.is_zero()
            checked += 1
        return {"frames_checked": checked, "vacuous": vacuous}

    def central_quadratic():
        two = Mat.scalar(domain, n, 2)
        probes = _unit_probes(domain, n)
        hits = []
        for t in enumerate_matrices(domain, n):
            central = all(mats_commute(t, x) for x in probes)
            assert central == t.is_central()
            if central and ((t - two) * (t + one)).is_zero():
                hits.append(t)
        assert sorted(hits, key=Mat.sort_key) == sorted(
            [two, -one], key=Mat.sort_key
        )
        return {"central_roots": len(hits)}

    def similar_to_projection():
        for e in enumerate_idempotents(domain, n):
            u, p = similarity_to_projection(e)
            assert p == u * e * u.inverse()
            assert p.is_idempotent() and p == p.transpose()
        return {}

    def involution_eigenspaces():
        for e in enumerate_idempotents(domain, n):
            u = iota(e)
            assert u.is_involution()
            plus, minus = plus_minus_space(u)
            assert plus == e.column_space()
            assert minus == (one - e).column_space()
            assert iota_inv(u) == e
        return {}

    def eigenspace_complement():
        for u in enumerate_involutions(domain, n):
            plus, minus = plus_minus_space(u)
            assert plus.rank + minus.rank == n
            assert plus.intersection_rank(minus) == 0
        return {}

    def rigidity():
        invs = list(enumerate_involutions(domain, n))
        spaces = {u: plus_minus_space(u) for u in invs}
        for u in invs:
            for v in invs:
                if spaces[u] == spaces[v]:
                    assert u == v
        return {"pairs": len(invs) ** 2}

    def class_parameterization():
        idems = list(enumerate_idempotents(domain, n))
        for e in idems:
            comp = one - e
            col = e.column_space()
            for f in idems:
                if e.column_space() == f.column_space():
                    y = f - e
                    assert e + e * y * comp == f
            for y in enumerate_matrices(domain, n):
                g = e + e * y * comp
                assert g.is_idempotent() and g.column_space() == col
        return {"idempotents": len(idems)}

    def nondegenerate_pairing():
        mats = [m for m in enumerate_matrices(domain, n) if not m.is_zero()]
        firsts = {}
        for m in mats:
            firsts[m] = next(
                (i, j) for i in range(n) for j in range(n) if m.rows[i][j]
            )
        red = domain.reduce
        for y in mats:
            i0, j0 = firsts[y]
            for x in mats:
                k0, l0 = firsts[x]
                # entry (i0, l0) of y E_{j0 k0} x is y[i0][j0] * x[k0][l0]
                assert red(y.rows[i0][j0] * x.rows[k0][l0])
        return {"pairs": len(mats) ** 2}

    def sign_overlap():
        families = {}
        for ds in all_delta_sets(domain, n):
            families[ds] = frozenset(enumerate_delta(ds))
        for d1, m1 in families.items():
            for d2, m2 in families.items():
                if m1 == m2:
                    assert d1 == d2
        singletons = [d for d, m in families.items() if len(m) == 1]
        assert len(singletons) == 2
        return {"distinct_families": len(families)}

    def minus_one_fixed():
        rng = cfg.rng()
        isos = _catalog(domain, n, rng, inner_count=3)
        for f in isos:
            assert check_minus_one(f), f.describe()
        return {"isos": len(isos)}

    def involution_double_centralizer_form():
        for u in enumerate_involutions(domain, n):
            e = iota_inv(u)
            for b in double_commutant_basis(u).basis:
                assert in_span(b, [e, one - e]) is not None
        return {}

    return [
        ("square-zero-frames", square_zero_frames),
        ("corner-center", corner_center),
        ("corner-nondegeneracy", corner_nondegeneracy),
        ("central-quadratic", central_quadratic),
        ("similar-to-projection", similar_to_projection),
        ("involution-eigenspaces", involution_eigenspaces),
        ("eigenspace-complement", eigenspace_complement),
        ("involution-rigidity", rigidity),
        ("class-parameterization", class_parameterization),
        ("nondegenerate-pairing", nondegenerate_pairing),
        ("sign-overlap", sign_overlap),
        ("minus-one-fixed", minus_one_fixed),
        ("involution-double-centralizer-form", involution_double_centralizer_form),
    ]


def _axioms_cases_sampled(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n
    one = Mat.identity(domain, n)
    zero = Mat.zeros(domain, n)
    count = cfg.samples

    def square_zero_frames():
        rng = cfg.rng()
        for _ in range(count):
            nil = sample_nilpotent_square_zero(domain, n, rng)
            frame = nilpotent_frame(nil)
            assert frame.e * nil * frame.g == nil
            assert frame.g * frame.e == zero
        return {"samples": count}

    def corner_center():
        rng = cfg.rng()
        hits = 0
        for _ in range(count):
            rank = int(rng.integers(1, n + 1))
            e = sample_idempotent(domain, n, rng, rank=rank)
            comp = one - e
            units = []
            while len(units) < 8:
                x = e * sample_matrix(domain, n, rng) * e
                if (x + comp).is_invertible():
                    units.append(x)
            z = domain.coerce(int(rng.integers(-3, 4)))
            assert all(mats_commute(e.scale(z), x) for x in units)
            basis = corner_basis(e, e)
            if len(basis) > 1:
                d1 = e * sample_matrix(domain, n, rng) * e
                if in_span(d1, [e]) is None:
                    assert not all(mats_commute(d1, x) for x in units), (
                        "corner probe failed to separate a non-scalar"
                    )
                    hits += 1
        return {"separated": hits}

    def corner_nondegeneracy():
        if n < 3:
            return {"vacuous": True}
        rng = cfg.rng()
        for _ in range(count):
            nil = sample_nilpotent_square_zero(domain, n, rng, rank=1)
            frame = nilpotent_frame(nil)
            e, g, f = frame.e, frame.g, frame.f
            fng = corner_basis(f, g)
            enf = corner_basis(e, f)
            fnf = corner_basis(f, f)
            a3 = e * sample_matrix(domain, n, rng) * f
            if not a3.is_zero():
                assert any(not (a3 * y).is_zero() for y in fng)
            a4 = f * sample_matrix(domain, n, rng) * f
            if not a4.is_zero():
                assert any(not (a4 * y).is_zero() for y in fng)
            a5 = f * sample_matrix(domain, n, rng) * g
            if not a5.is_zero():
                assert any(not (y * a5).is_zero() for y in enf)
        return {"samples": count}

    def central_quadratic():
        rng = cfg.rng()
        two = Mat.scalar(domain, n, 2)
        probes = _unit_probes(domain, n)
        for _ in range(count):
            t = sample_matrix(domain, n, rng)
            central = all(mats_commute(t, x) for x in probes)
            assert central == t.is_central()
            if central and ((t - two) * (t + one)).is_zero():
                assert t == two or t == -one
        for c in (2, -1, 0, 1, 3):
            t = Mat.scalar(domain, n, c)
            if ((t - two) * (t + one)).is_zero():
                assert c in (2, -1)
        return {"samples": count}

    def similar_to_projection():
        rng = cfg.rng()
        for _ in range(count):
            e = sample_idempotent(domain, n, rng)
            u, p = similarity_to_projection(e)
            assert p == u * e * u.inverse()
            assert p.is_idempotent() and p == p.transpose()
        return {"samples": count}

    def involution_eigenspaces():
        rng = cfg.rng()
        for _ in range(count):
            e = sample_idempotent(domain, n, rng)
            u = iota(e)
            plus, minus = plus_minus_space(u)
            assert plus == e.column_space()
            assert minus == (one - e).column_space()
            assert iota_inv(u) == e
        return {"samples": count}

    def eigenspace_complement():
        rng = cfg.rng()
        for _ in range(count):
            u = sample_involution(domain, n, rng)
            plus, minus = plus_minus_space(u)
            assert plus.rank + minus.rank == n
            assert plus.intersection_rank(minus) == 0
        return {"samples": count}

    def rigidity():
        rng = cfg.rng()
        for _ in range(count):
            u = sample_involution(domain, n, rng)
            v = sample_involution(domain, n, rng)
            assert involution_rigidity(u, v)
            if plus_minus_space(u) == plus_minus_space(v):
                assert u == v
        return {"samples": count}

    def class_parameterization():
        rng = cfg.rng()
        for _ in range(count):
            e = sample_idempotent(domain, n, rng)
            comp = one - e
            y = sample_matrix(domain, n, rng)
            f = e + e * y * comp
            assert f.is_idempotent()
            assert f.column_space() == e.column_space()
            yw = f - e
            assert e + e * yw * comp == f
        return {"samples": count}

    def nondegenerate_pairing():
        rng = cfg.rng()
        red = domain.reduce
        for _ in range(count):
            y = sample_matrix(domain, n, rng)
            x = sample_matrix(domain, n, rng)
            if y.is_zero() or x.is_zero():
                continue
            i0, j0 = next(
                (i, j) for i in range(n) for j in range(n) if y.rows[i][j]
            )
            k0, l0 = next(
                (i, j) for i in range(n) for j in range(n) if x.rows[i][j]
            )
            t = Mat.unit(domain, n, j0, k0)
            prod = y * t * x
            assert prod.rows[i0][l0] == red(y.rows[i0][j0] * x.rows[k0][l0])
            assert not prod.is_zero()
        return {"samples": count}

    def sign_overlap():
        rng = cfg.rng()
        for _ in range(count):
            rank = int(rng.integers(1, n))
            e = sample_idempotent(domain, n, rng, rank=rank)
            offs = class_offset_basis(e)
            u1, u2 = iota(e), iota(e + offs[0])
            # two distinct members never share the minus eigenspace, so no
            # minus-family can contain the whole plus-family
            assert plus_minus_space(u1)[1] != plus_minus_space(u2)[1]
        return {"samples": count}

    def minus_one_fixed():
        rng = cfg.rng()
        isos = _catalog(domain, n, rng, inner_count=3)
        for f in isos:
            assert check_minus_one(f), f.describe()
        return {"isos": len(isos)}

    def involution_double_centralizer_form():
        rng = cfg.rng()
        for _ in range(min(count, 200)):
            e = sample_idempotent(domain, n, rng)
            u = iota(e)
            for b in double_commutant_basis(u).basis:
                assert in_span(b, [e, one - e]) is not None
        return {}

    return [
        ("square-zero-frames", square_zero_frames),
        ("corner-center", corner_center),
        ("corner-nondegeneracy", corner_nondegeneracy),
        ("central-quadratic", central_quadratic),
        ("similar-to-projection", similar_to_projection),
        ("involution-eigenspaces", involution_eigenspaces),
        ("eigenspace-complement", eigenspace_complement),
        ("involution-rigidity", rigidity),
        ("class-parameterization", class_parameterization),
        ("nondegenerate-pairing", nondegenerate_pairing),
        ("sign-overlap", sign_overlap),
        ("minus-one-fixed", minus_one_fixed),
        ("involution-double-centralizer-form", involution_double_centralizer_form),
    ]


def run_axioms(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    if cfg.mode == "exhaustive":
        cases = _axioms_cases_exhaustive(cfg)
    else:
        cases = _axioms_cases_sampled(cfg)
    return run_cases("axioms", cfg, cases)


# ---------------------------------------------------------------------------
# classtwo suite: witnesses, block criterion, double-centralizer form
# ---------------------------------------------------------------------------

def _sample_commuting_block(frame, rng) -> Mat:
    """Random invertible element of the block-triangular commutant shape."""
    e, g, f, k, nil = frame.e, frame.g, frame.f, frame.k, frame.nil
    domain, n = e.domain, e.n
    while True:
        t1 = e * sample_matrix(domain, n, rng) * e
        t = (
            t1
            + e * sample_matrix(domain, n, rng) * g
            + e * sample_matrix(domain, n, rng) * f
            + k * t1 * nil
            + f * sample_matrix(domain, n, rng) * g
            + f * sample_matrix(domain, n, rng) * f
        )
        if t.is_invertible():
            return t


def _classtwo_cases_sampled(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n
    one = Mat.identity(domain, n)

    def witness_identities():
        rng = cfg.rng()
        for _ in range(cfg.samples):
            s = sample_class_two(domain, n, rng)
            u, r = witness_u_r(s)  # all five identities assert inside
            assert u.is_involution() and r.is_invertible()
        return {"samples": cfg.samples}

    def double_centralizer_form():
        rng = cfg.rng()
        for _ in range(cfg.samples):
            s = sample_class_two(domain, n, rng)
            nil = s - one
            dc = double_commutant_basis(s)
            assert span_key(dc.basis) == span_key([one, nil])
        return {"samples": cfg.samples}

    def double_centralizer_solutions():
        rng = cfg.rng()
        rounds = min(cfg.samples, 200)
        for _ in range(rounds):
            s = sample_class_two(domain, n, rng)
            nil = s - one
            assert double_centralizer_structure(s, one) == (
                domain.one,
                domain.zero,
            )
            assert double_centralizer_structure(s, s) == (
                domain.one,
                domain.one,
            )
            z1 = domain.coerce(int(rng.integers(1, 4)))
            z2 = domain.coerce(int(rng.integers(-3, 4)))
            d = one.scale(z1) + nil.scale(z2)
            assert double_centralizer_structure(s, d) == (z1, z2)
            # members of the two-parameter family centralize the commutant
            for b in commutant_basis(s).basis:
                assert mats_commute(d, b)
        return {"samples": rounds}

    def block_criterion():
        rng = cfg.rng()
        s = sample_class_two(domain, n, rng)
        frame = nilpotent_frame(s - one)
        agree = 0
        for i in range(cfg.samples):
            if i % 2 == 0:
                t = sample_invertible(domain, n, rng)
            else:
                t = _sample_commuting_block(frame, rng)
            assert centralizer_form_check(t, frame) == mats_commute(t, s)
            agree += 1
        return {"t_samples": agree}

    return [
        ("witness-identities", witness_identities),
        ("double-centralizer-form", double_centralizer_form),
        ("double-centralizer-solutions", double_centralizer_solutions),
        ("block-criterion", block_criterion),
    ]


def _classtwo_cases_exhaustive(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n
    one = Mat.identity(domain, n)

    def witness_identities():
        count = 0
        for nil in enumerate_square_zero(domain, n):
            s = one + nil
            witness_u_r(s)
            count += 1
        return {"class_two_elements": count}

    def double_centralizer_form():
        count = 0
        for nil in enumerate_square_zero(domain, n):
            s = one + nil
            dc = double_commutant_basis(s)
            assert span_key(dc.basis) == span_key([one, nil])
            count += 1
        return {"class_two_elements": count}

    def block_criterion():
        nil = next(iter(enumerate_square_zero(domain, n)))
        s = one + nil
        frame = nilpotent_frame(nil)
        for t in enumerate_invertibles(domain, n):
            assert centralizer_form_check(t, frame) == mats_commute(t, s)
        return {"s": s.to_json()}

    return [
        ("witness-identities", witness_identities),
        ("double-centralizer-form", double_centralizer_form),
        ("block-criterion", block_criterion),
    ]


def run_classtwo(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    if cfg.mode == "exhaustive":
        cases = _classtwo_cases_exhaustive(cfg)
    else:
        cases = _classtwo_cases_sampled(cfg)
    return run_cases("classtwo", cfg, cases)


# ---------------------------------------------------------------------------
# thmC suite: the four-condition decision against the direct definition
# ---------------------------------------------------------------------------

def _thmc_row(s: Mat) -> dict:
    result = theorem_c_decide(s, "exhaustive")
    row = result.to_json()
    row["expected"] = is_class_two(s)
    row["ok"] = result.verdict == is_class_two(s)
    return row


def _sample_mixed_invertible(domain, n, rng) -> Mat:
    """Class-2, conjugated-diagonal, higher-class unipotent, or generic."""
    kind = int(rng.integers(0, 4))
    one = Mat.identity(domain, n)
    if kind == 0:
        return sample_class_two(domain, n, rng)
    if kind == 1:
        entries = [domain.coerce(int(rng.integers(1, 5))) for _ in range(n)]
        g = sample_invertible(domain, n, rng)
        return g * Mat.diag(domain, entries) * g.inverse()
    if kind == 2 and n >= 3:
        jordan = Mat(
            domain,
            [
                [1 if i == j else (1 if j == i + 1 else 0) for j in range(n)]
                for i in range(n)
            ],
        )
        g = sample_invertible(domain, n, rng)
        return g * jordan * g.inverse()
    while True:
        s = sample_invertible(domain, n, rng)
        if s != one:
            return s


def run_thm_c(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    import time

    report = VerificationReport(suite="thmC", config=cfg.to_json())
    start = time.perf_counter()
    if cfg.mode == "exhaustive":
        one = Mat.identity(cfg.domain, cfg.n)
        # prime shared caches before any fan-out
        gl_elements(cfg.domain, cfg.n)
        from .centralizers import (
            gl_centralizer_sets,
            involution_double_centralizer_groups,
        )

        gl_centralizer_sets(cfg.domain, cfg.n)
        involution_double_centralizer_groups(cfg.domain, cfg.n)
        elements = [s for s in gl_elements(cfg.domain, cfg.n) if s != one]
        rows = _pmap(_thmc_row, elements, cfg.workers)
        for row in rows:
            report.cases += 1
            if row["ok"]:
                report.passes += 1
            else:
                report.failures.append({"case": "thmC-exhaustive", "row": row})
        report.rows = rows
        report.notes["class_two_count"] = sum(1 for r in rows if r["expected"])
    else:
        rng = cfg.rng()
        rows = []
        for _ in range(cfg.samples):
            s = _sample_mixed_invertible(cfg.domain, cfg.n, rng)
            result = theorem_c_decide(s, "structural")
            row = result.to_json()
            row["expected"] = is_class_two(s)
            row["ok"] = result.verdict == is_class_two(s)
            rows.append(row)
            report.cases += 1
            if row["ok"]:
                report.passes += 1
            else:
                report.failures.append({"case": "thmC-structural", "row": row})
        report.rows = rows
        report.notes["class_two_count"] = sum(1 for r in rows if r["expected"])
    report.wall_time_s = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# deltaB suite: the four properties, maximality, recovery
# ---------------------------------------------------------------------------

def _delta_exhaustive_case(ds: DeltaSet) -> dict:
    domain = ds.ideal.domain
    n = ds.ideal.n
    members = list(enumerate_delta(ds))
    detail = {"family": ds.to_json(), "size": len(members)}

    import itertools

    for u, v, w in itertools.product(members, repeat=3):
        assert property_a(u, v, w, ds)
    for u, v in itertools.product(members, repeat=2):
        property_b_solve(u, v, ds)  # asserts membership and uniqueness
        assert property_d_square(u, v, ds)
    for x in enumerate_involutions(domain, n):
        lhs, rhs = property_c_normalizer(x, ds)
        assert lhs == rhs
        sym_lhs, sym_rhs = property_c_normalizer(x, ds, symbolic=True)
        assert (sym_lhs, sym_rhs) == (lhs, rhs)

    maxres = maximality_check(ds)
    assert maxres.inside_ok
    assert not maxres.missing, f"no violation found for {maxres.missing[:1]}"
    detail["outside_violations"] = len(maxres.violations)

    if not ds.is_trivial():
        phi = PhiSample(tuple(members))
        assert fixed_space_of_square(phi) == ds.ideal
    return detail


def _delta_b_cases_exhaustive(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n

    def families():
        sets = all_delta_sets(domain, n)
        details = _pmap(_delta_exhaustive_case, sets, cfg.workers)
        sizes = sorted(d["size"] for d in details)
        return {"families": len(sets), "sizes": sizes}

    def annihilator_cases():
        one = Mat.identity(domain, n)
        u_list = [iota(e) for e in [
            next(iter(enumerate_idempotents(domain, n))),
        ]]
        u_list += [one, -one, iota(Mat.unit(domain, n, 0, 0))]
        nil = next(iter(enumerate_square_zero(domain, n)))
        b_families = [
            [],
            [one],
            [Mat.unit(domain, n, n - 1, n - 1)],
            [nil],
            [nil, Mat.unit(domain, n, 0, 0)],
        ]
        checked = 0
        for u in u_list:
            for bs in b_families:
                res = annihilator_invariance_check(u, bs)
                assert res.holds
                checked += 1
        return {"checked": checked}

    return [("delta-families", families), ("annihilator-cases", annihilator_cases)]


def _find_outsider_violation(ds: DeltaSet, members: list[Mat], v: Mat):
    """A property broken by adjoining the outsider v, for symbolic families.

    Index-2 products are tried first; if every product with the sampled
    members is unipotent, the midpoint (u + v)/2 must escape the enlarged
    family, which pins a uniqueness/closure violation.
    """
    one = Mat.identity(v.domain, v.n)
    for u in members:
        for t in (u * v, v * u):
            d = t - one
            if not (d * d).is_zero():
                return ("square", (u, v))
    u = members[0]
    w = (u + v).scale(v.domain.halve(v.domain.one))
    if not w.is_involution():
        return ("midpoint-not-involution", (u, v))
    if not contains(ds, w) and w != v:
        return ("midpoint-escapes", (u, v))
    return None


def _delta_b_cases_sampled(cfg: RunConfig):
    domain, n = cfg.domain, cfg.n

    def sampled_properties():
        rng = cfg.rng()
        rounds = cfg.samples
        for _ in range(rounds):
            rank = int(rng.integers(1, n))
            e = sample_idempotent(domain, n, rng, rank=rank)
            sign = PLUS if int(rng.integers(0, 2)) == 0 else MINUS
            ds = DeltaSet.make(sign, e.column_space())
            offs = class_offset_basis(e)

            def member():
                y = sample_matrix(domain, n, rng)
                f = e + e * y * (Mat.identity(domain, n) - e)
                u = iota(f)
                return u if ds.sign == PLUS else -u

            u, v, w = member(), member(), member()
            assert property_a(u, v, w, ds)
            property_b_solve(u, v, ds)
            assert property_d_square(u, v, ds)
            x = sample_involution(domain, n, rng)
            lhs, rhs = property_c_normalizer(x, ds)
            assert lhs == rhs
        return {"tuples": rounds}

    def sampled_recovery():
        rng = cfg.rng()
        rounds = min(cfg.samples, 100)
        one = Mat.identity(domain, n)
        for _ in range(rounds):
            rank = int(rng.integers(1, n))
            e = sample_idempotent(domain, n, rng, rank=rank)
            offs = class_offset_basis(e)
            f = e + offs[int(rng.integers(0, len(offs)))]
            phi = PhiSample((iota(e), iota(f)))
            assert fixed_space_of_square(phi) == e.column_space()
        return {"two_member_samples": rounds}

    def sampled_maximality():
        rng = cfg.rng()
        rounds = min(cfg.samples, 1000)
        found = 0
        for _ in range(rounds):
            rank = int(rng.integers(1, n))
            e = sample_idempotent(domain, n, rng, rank=rank)
            ds = DeltaSet.make(PLUS, e.column_space())
            offs = class_offset_basis(e)
            members = [iota(e)] + [iota(e + b) for b in offs[:3]]
            v = sample_involution(domain, n, rng)
            if contains(ds, v):
                continue
            hit = _find_outsider_violation(ds, members, v)
            assert hit is not None, "outsider admitted without violation"
            found += 1
        return {"outsiders": found, "label": "sampled maximality"}

    return [
        ("sampled-properties", sampled_properties),
        ("sampled-recovery", sampled_recovery),
        ("sampled-maximality", sampled_maximality),
    ]


def run_delta_b(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    if cfg.mode == "exhaustive":
        cases = _delta_b_cases_exhaustive(cfg)
    else:
        cases = _delta_b_cases_sampled(cfg)
    return run_cases("deltaB", cfg, cases)


# ---------------------------------------------------------------------------
# thmD suite: transport of classes along catalog isomorphisms
# ---------------------------------------------------------------------------

def _catalog(domain, n: int, rng, inner_count: int = 10) -> list[IsoSpec]:
    isos = [iso_identity(domain, n)]
    for _ in range(inner_count):
        isos.append(iso_inner(sample_invertible(domain, n, rng)))
    isos.append(iso_transpose_inverse(domain, n))
    isos.append(iso_inner(sample_invertible(domain, n, rng)).then(TransposeInverse()))
    return isos


def run_thm_d(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    domain, n = cfg.domain, cfg.n
    rng = cfg.rng()
    isos = _catalog(domain, n, rng, inner_count=cfg.extras.get("inner_count", 10))

    def exhaustive_case(f: IsoSpec):
        def case():
            rep = verify_theorem_d(f)
            assert rep.minus_one_fixed
            assert rep.bijective and rep.inverse_composes
            has_flip = any(isinstance(s, TransposeInverse) for s in f.steps)
            if has_flip:
                assert not rep.orientations.i_o(), "expected all classes flipped"
            else:
                assert not rep.orientations.i_obar(), "expected no class flipped"
            # orientation is independent of the member pair used to detect it
            for ideal in list(rep.orientations.table)[:2]:
                e = ideal.projection()
                offs = class_offset_basis(e)
                alt = (iota(e + offs[-1]), iota(e))
                assert orientation(f, e, members=alt) == rep.orientations.table[ideal]
            for ideal in rep.orientations.table:
                assert verify_orientation_propagation(f, ideal.projection())
            return rep.to_json()

        return case

    def sampled_case(f: IsoSpec):
        def case():
            local = cfg.rng()
            assert check_minus_one(f)
            f_inv = f.inverse()
            one = Mat.identity(domain, n)
            for _ in range(min(cfg.samples, 50)):
                rank = int(local.integers(0, n + 1))
                e = sample_idempotent(domain, n, local, rank=rank)
                ideal = e.column_space()
                image = theta_tilde(f, ideal)
                assert theta_tilde(f_inv, image) == ideal
                th = theta(f, e)
                assert th.is_idempotent()
                assert theta(f_inv, th) == e
                if not ideal.is_trivial():
                    assert verify_orientation_propagation(f, e)
            for _ in range(min(cfg.samples, 200)):
                u = sample_invertible(domain, n, local)
                v = sample_invertible(domain, n, local)
                assert f.apply(u * v) == f.apply(u) * f.apply(v)
            return {}

        return case

    builder = exhaustive_case if cfg.mode == "exhaustive" else sampled_case
    cases = [(f"iso-{i}-{f.describe()}", builder(f)) for i, f in enumerate(isos)]
    return run_cases("thmD", cfg, cases)


# ---------------------------------------------------------------------------
# witness and enumerate subcommands
# ---------------------------------------------------------------------------

def run_witness(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    rows = cfg.extras.get("s_rows")
    if rows is None:
        raise ValueError("witness needs an input matrix (--s)")
    s = Mat(cfg.domain, rows)

    def case():
        u, r = witness_u_r(s)
        frame = nilpotent_frame(s - Mat.identity(cfg.domain, s.n))
        return {
            "s": s.to_json(),
            "u": u.to_json(),
            "r": r.to_json(),
            "frame": frame.to_json(),
        }

    return run_cases("witness", cfg, [("witness", case)])


ENUMERATION_KINDS = (
    "all",
    "idempotent",
    "involution",
    "invertible",
    "nilpotent2",
    "class2",
)


def run_enumerate(cfg: RunConfig) -> VerificationReport:
    cfg.validate()
    if not cfg.domain.is_finite:
        raise ValueError("enumeration needs a prime-field domain")
    kind = cfg.extras.get("kind", "all")
    if kind not in ENUMERATION_KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    domain, n = cfg.domain, cfg.n
    one = Mat.identity(domain, n)

    def case():
        if kind == "all":
            elems = list(enumerate_matrices(domain, n))
        elif kind == "idempotent":
            elems = list(enumerate_idempotents(domain, n))
        elif kind == "involution":
            elems = list(enumerate_involutions(domain, n))
        elif kind == "invertible":
            elems = list(enumerate_invertibles(domain, n))
        elif kind == "nilpotent2":
            elems = list(enumerate_square_zero(domain, n))
        else:
            elems = [one + m for m in enumerate_square_zero(domain, n)]
        detail = {"kind": kind, "count": len(elems)}
        if cfg.extras.get("list"):
            detail["elements"] = [m.to_json() for m in elems]
        return detail

    return run_cases("enumerate", cfg, [(f"enumerate-{kind}", case)])


SUITES = {
    "axioms": run_axioms,
    "classtwo": run_classtwo,
    "thmC": run_thm_c,
    "deltaB": run_delta_b,
    "thmD": run_thm_d,
    "witness": run_witness,
    "enumerate": run_enumerate,
}


def run_suite(name: str, cfg: RunConfig) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](cfg)
