"""Instance-level audit sweeps behind the verify and audit subcommands.

Each sweep walks the enumerated instances of one size and turns the bound
statements into exact certificates.  A failed certificate is a falsification
event: the report flags it and the CLI exits nonzero.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import bounds
from .analyze import (
    degree3_profile,
    is_three_connected,
    min_degree,
    minimum_separating_cycle,
    separating_four_cycles,
    split_at_cycle,
    compaction,
)
from .construct import build_qn
from .embed import (
    Quadrangulation,
    canonical_code,
    graph_from_record,
    validate_quadrangulation,
)
from .enumeration import DEFAULT_LIMIT, enumerate_quadrangulations
from .errors import (
    QuadwienerError,
    StructureViolationError,
    TooSmallError,
    WrongConfigurationError,
)
from .metrics import all_pairs_distances, level_structure, status, wiener_index
from .surgery import (
    SurgeryCertificate,
    contract_to_x,
    contraction_context,
    dec,
    delete_degree2,
    good_vertex_surgery,
    survivor_map,
)

_check = SurgeryCertificate.check


@dataclass(frozen=True)
class LevelCheck:
    """One status-versus-bound comparison whose level hypothesis held."""

    source_kind: str
    source: tuple[int, ...]
    bound_name: str
    sigma: int
    bound: Fraction
    passed: bool


@dataclass(frozen=True)
class InstanceRecord:
    n: int
    code_hex: str
    wiener: int
    bound: int
    slack: int
    min_degree: int
    separating_cycles: int
    three_connected: bool
    degree_structure_ok: bool
    connectivity_ok: bool
    level_checked: int = 0
    level_failed: int = 0
    cert_total: int = 0
    cert_failed: int = 0
    failures: tuple[str, ...] = ()
    certificates: tuple[SurgeryCertificate, ...] = ()

    @property
    def ok(self) -> bool:
        return (
            self.slack >= 0
            and self.degree_structure_ok
            and self.connectivity_ok
            and self.level_failed == 0
            and self.cert_failed == 0
        )


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    n_min: int
    n_max: int
    records: tuple[InstanceRecord, ...]
    summary: dict
    ok: bool


# -- per-instance audits --------------------------------------------------------


def level_checks(q: Quadrangulation) -> list[LevelCheck]:
    """Status bounds for singletons and the two families of special 4-sets.

    A comparison is recorded only when the matching level hypothesis holds:
    all strictly-between levels of size >= 2 (resp. >= 3), and for the
    middle bound additionally a non-terminal second level of size >= 3.
    """
    sources: list[tuple[str, tuple[int, ...]]] = [
        ("vertex", (v,)) for v in range(q.n)
    ]
    for v in range(q.n):
        if q.degrees[v] == 2:
            try:
                ctx = contraction_context(q, v)
            except QuadwienerError:
                continue
            sources.append(("contraction", tuple(sorted(ctx.cherry_set))))
    for cyc in separating_four_cycles(q):
        sources.append(("separating", tuple(sorted(cyc.cycle))))

    out = []
    for kind, src in sources:
        ls = level_structure(q, src)
        sizes = ls.level_sizes()
        t = ls.terminal_index
        mids = sizes[1:t]
        sigma = sum(i * size for i, size in enumerate(sizes))
        n_out = q.n - len(src)
        if all(size >= 2 for size in mids):
            out.append(
                LevelCheck(kind, src, "two", sigma, b := bounds.level_bound_two(n_out), sigma <= b)
            )
            if t >= 3 and sizes[2] >= 3:
                b4 = bounds.level_bound_second_three(n_out)
                out.append(LevelCheck(kind, src, "second_three", sigma, b4, sigma <= b4))
        if all(size >= 3 for size in mids):
            b5 = bounds.level_bound_three(n_out)
            out.append(LevelCheck(kind, src, "three", sigma, b5, sigma <= b5))
    return out


def _degree2_certificates(q, W, wiener_fn) -> list[SurgeryCertificate]:
    n = q.n
    certs: list[SurgeryCertificate] = []
    if n < 5:
        return certs
    for v in range(n):
        if q.degrees[v] != 2:
            continue
        child = delete_degree2(q, v)
        w_child = wiener_fn(child)
        sigma_v = status(q, (v,))
        certs.append(_check("degree2.size", n, child.n, child.n, n - 1, "=="))
        certs.append(
            _check("degree2.deletion_bound", n, child.n, W, w_child + sigma_v, "<=", f"v={v}")
        )
        ls = level_structure(q, (v,))
        sizes = ls.level_sizes()
        mids = sizes[1 : ls.terminal_index]
        if all(s >= 2 for s in mids):
            certs.append(
                _check(
                    "degree2.sigma_level2", n, None, sigma_v, bounds.level_bound_two(n - 1), "<=", f"v={v}"
                )
            )
        if n % 2 == 0:
            certs.append(
                _check("degree2.even_chain", n, child.n, W, bounds.deletion_chain_even(n), "<=", f"v={v}")
            )
        elif ls.terminal_index >= 3 and all(s >= 2 for s in mids) and sizes[2] >= 3:
            rhs = bounds.even_case_value(n - 1) + bounds.level_bound_second_three(n - 1)
            certs.append(_check("degree2.second_level3_chain", n, child.n, W, rhs, "<=", f"v={v}"))
    return certs


def _contraction_certificates(q, W, wiener_fn) -> list[SurgeryCertificate]:
    n = q.n
    certs: list[SurgeryCertificate] = []
    dist = all_pairs_distances(q)
    for v in range(n):
        if q.degrees[v] != 2:
            continue
        try:
            ctx = contraction_context(q, v)
        except (WrongConfigurationError, TooSmallError):
            continue
        child = contract_to_x(q, v)
        w_child = wiener_fn(child)
        tag = f"v={v}"
        certs.append(_check("contraction.size", n, child.n, child.n, n - 2, "=="))

        gone = {ctx.v, ctx.x1, ctx.x2}
        relabel = survivor_map(n, gone)
        x_new = child.n - 1
        d_child = all_pairs_distances(child)
        survivors = [u for u in range(n) if u not in gone]
        mismatches = 0
        for i, u in enumerate(survivors):
            for w2 in survivors[i + 1 :]:
                if dist[u][w2] != d_child[relabel[u]][relabel[w2]]:
                    mismatches += 1
            if dist[u][ctx.v] != d_child[relabel[u]][x_new] + 1:
                mismatches += 1
        certs.append(
            _check("contraction.distance_identities", n, child.n, mismatches, 0, "==", tag)
        )

        sx1 = sum(dist[u][ctx.x1] for u in range(n) if u not in (ctx.x1, ctx.x2))
        sx2 = sum(dist[u][ctx.x2] for u in range(n) if u not in (ctx.x1, ctx.x2))
        certs.append(
            _check(
                "contraction.decomposition",
                n,
                child.n,
                W,
                w_child + (n - 3) + sx1 + sx2 + 2,
                "==",
                tag,
            )
        )

        five = (ctx.x3, ctx.x4, ctx.z1, ctx.z2, ctx.v)
        pair_sum4 = sum(dist[x][w2] for x in (ctx.x1, ctx.x2) for w2 in five[:4])
        pair_sum5 = sum(dist[x][w2] for x in (ctx.x1, ctx.x2) for w2 in five)
        certs.append(
            _check("contraction.neighbour_degrees", n, None, q.degrees[ctx.x1] + q.degrees[ctx.x2], 6, "==", tag)
        )
        certs.append(_check("contraction.dist_sum_cherry_set", n, None, pair_sum4, 12, "==", tag))
        certs.append(_check("contraction.dist_sum_with_apex", n, None, pair_sum5, 14, "==", tag))

        cherry = sorted(ctx.cherry_set)
        d_S = [min(dist[s][u] for s in cherry) for u in range(n)]
        special = set(five) | {ctx.x1, ctx.x2}
        outsiders = [u for u in range(n) if u not in special and u not in ctx.cherry_set]
        if outsiders:
            worst = max(
                dist[u][ctx.x1] + dist[u][ctx.x2] - 2 * d_S[u] - 4 for u in outsiders
            )
            certs.append(_check("contraction.cherry_detour", n, None, worst, 0, "<=", tag))
        sigma_prime = sum(d_S[u] for u in outsiders)
        certs.append(
            _check(
                "contraction.sigma_outside",
                n,
                None,
                sigma_prime,
                bounds.level_bound_two(n - 7),
                "<=",
                tag,
            )
        )
        if n % 2 == 1:
            certs.append(
                _check(
                    "contraction.chain",
                    n,
                    child.n,
                    W,
                    bounds.contraction_chain_instance_bound(n),
                    "<=",
                    tag,
                )
            )
    return certs


def _good_vertex_certificates(q, W, wiener_fn) -> list[SurgeryCertificate]:
    n = q.n
    certs: list[SurgeryCertificate] = []
    if min_degree(q) != 3:
        return certs
    seps = separating_four_cycles(q)
    for v in range(n):
        if q.degrees[v] != 3:
            continue
        try:
            profile = degree3_profile(q, v)
        except StructureViolationError as exc:
            certs.append(_check("good_vertex.profile", n, None, 1, 0, "==", f"v={v}: {exc}"))
            continue
        if not profile.is_good:
            continue
        sigma_v = status(q, (v,))
        decs = []
        for i in (1, 2, 3):
            child = good_vertex_surgery(q, profile, i)
            d_i = dec(q, child, v)
            decs.append(d_i)
            tag = f"v={v},i={i}"
            certs.append(_check("good_vertex.size", n, child.n, child.n, n - 1, "=="))
            certs.append(_check("good_vertex.dec_nonnegative", n, child.n, 0, d_i, "<=", tag))
            certs.append(
                _check(
                    "good_vertex.identity",
                    n,
                    child.n,
                    W,
                    wiener_fn(child) + sigma_v + d_i,
                    "==",
                    tag,
                )
            )
        certs.append(
            _check("good_vertex.min_dec_bound", n, None, min(decs), bounds.dec_bound(n), "<=", f"v={v}")
        )
        if not seps and n >= 6:
            ls = level_structure(q, (v,))
            sizes = ls.level_sizes()
            mids = sizes[1 : ls.terminal_index]
            min_mid = min(mids) if mids else 3
            certs.append(_check("three_connected.levels_ge3", n, None, 3, min_mid, "<=", f"v={v}"))
            certs.append(
                _check(
                    "three_connected.sigma_level3",
                    n,
                    None,
                    sigma_v,
                    bounds.level_bound_three(n - 1),
                    "<=",
                    f"v={v}",
                )
            )
            certs.append(
                _check("three_connected.chain", n, None, W, bounds.good_vertex_chain_value(n), "<=", f"v={v}")
            )
    return certs


def _split_certificates(q, W, wiener_fn) -> list[SurgeryCertificate]:
    n = q.n
    certs: list[SurgeryCertificate] = []
    seps = separating_four_cycles(q)
    if not seps:
        return certs
    dist = all_pairs_distances(q)
    delta3 = min_degree(q) == 3
    minimum = minimum_separating_cycle(q)
    for cyc in seps:
        x = len(cyc.interior)
        tag = f"cycle={cyc.cycle}"
        inner, outer = split_at_cycle(q, cyc)
        certs.append(_check("split.inner_size", n, inner.n, inner.n, x + 4, "=="))
        certs.append(_check("split.outer_size", n, outer.n, outer.n, n - x, "=="))

        w_in, w_out = wiener_fn(inner), wiener_fn(outer)
        cross = sum(dist[u][w2] for u in cyc.interior for w2 in cyc.exterior)
        certs.append(
            _check("split.parts_bound", n, None, W, w_in + w_out - 8 + cross, "<=", tag)
        )
        in_map = compaction(cyc.interior | set(cyc.cycle))
        out_map = compaction(cyc.exterior | set(cyc.cycle))
        sigma_out = status(outer, tuple(out_map[z] for z in cyc.cycle))
        max_sigma_in = max(status(inner, (in_map[z],)) for z in cyc.cycle)
        certs.append(
            _check(
                "split.cross_bound",
                n,
                None,
                cross,
                x * sigma_out + (n - x - 4) * (max_sigma_in - 4),
                "<=",
                tag,
            )
        )

        is_min = minimum is not None and cyc.cycle == minimum.cycle
        if delta3 and is_min:
            certs.append(_check("split.interior_ge4", n, None, 4, x, "<=", tag))
            certs.append(_check("split.exterior_ge4", n, None, 4, n - x - 4, "<=", tag))
            certs.append(
                _check(
                    "split.inner_three_connected",
                    n,
                    inner.n,
                    1,
                    int(is_three_connected(inner)),
                    "==",
                    tag,
                )
            )
            certs.append(
                _check("split.chain", n, None, W, bounds.split_chain_value(n, x), "<=", tag)
            )
    return certs


def surgery_certificates(q: Quadrangulation, wiener_fn=wiener_index) -> list[SurgeryCertificate]:
    """Every applicable surgery certificate for one instance."""
    W = wiener_fn(q)
    certs = _degree2_certificates(q, W, wiener_fn)
    certs += _contraction_certificates(q, W, wiener_fn)
    certs += _good_vertex_certificates(q, W, wiener_fn)
    certs += _split_certificates(q, W, wiener_fn)
    return certs


# -- per-size sweeps -------------------------------------------------------------


def _base_record(q: Quadrangulation, wiener_fn) -> dict:
    n = q.n
    w = wiener_fn(q)
    bound = bounds.conjectured_max(n)
    seps = separating_four_cycles(q)
    three = is_three_connected(q)
    return {
        "n": n,
        "code_hex": canonical_code(q).hex(),
        "wiener": w,
        "bound": bound,
        "slack": bound - w,
        "min_degree": min_degree(q),
        "separating_cycles": len(seps),
        "three_connected": three,
        "degree_structure_ok": q.edge_count == 2 * n - 4 and min_degree(q) in (2, 3),
        "connectivity_ok": n < 6 or bool(seps) or three,
    }


def _verify_one(q: Quadrangulation, wiener_fn=wiener_index) -> InstanceRecord:
    return InstanceRecord(**_base_record(q, wiener_fn))


def _lemma_one(q: Quadrangulation, wiener_fn=wiener_index) -> InstanceRecord:
    base = _base_record(q, wiener_fn)
    checks = level_checks(q)
    failed = [c for c in checks if not c.passed]
    return InstanceRecord(
        **base,
        level_checked=len(checks),
        level_failed=len(failed),
        failures=tuple(
            f"{c.bound_name}:{c.source_kind}{c.source}:sigma={c.sigma}>bound={c.bound}"
            for c in failed
        ),
    )


def _surgery_one(q: Quadrangulation, wiener_fn=wiener_index) -> InstanceRecord:
    base = _base_record(q, wiener_fn)
    certs = surgery_certificates(q, wiener_fn)
    failed = [c for c in certs if not c.passed]
    return InstanceRecord(
        **base,
        cert_total=len(certs),
        cert_failed=len(failed),
        failures=tuple(
            f"{c.operation}[{c.detail}]:{c.lhs}{c.relation}{c.rhs}" for c in failed
        ),
        certificates=tuple(certs),
    )


_AUDITORS = {"verify": _verify_one, "lemmas": _lemma_one, "surgery": _surgery_one}


def _audit_worker(args: tuple[str, bytes]) -> InstanceRecord:
    kind, record = args
    return _AUDITORS[kind](validate_quadrangulation(graph_from_record(record)))


def run_audit(
    kind: str,
    n_max: int,
    *,
    n_min: int = 4,
    limit: int = DEFAULT_LIMIT,
    workers: int = 1,
    wiener_fn=None,
) -> VerificationReport:
    """Audit every enumerated instance with 4 <= n <= n_max.

    ``kind`` picks the sweep: "verify" (extremal bound plus the two basic
    structure audits), "lemmas" (level-hypothesis status bounds) or "surgery"
    (case certificates).  A custom ``wiener_fn`` forces serial execution; it
    exists so tests can inject corrupted values.
    """
    if kind not in _AUDITORS:
        raise ValueError(f"unknown audit kind {kind!r}")
    if n_max < n_min:
        raise ValueError(f"n_max = {n_max} below n_min = {n_min}")
    records: list[InstanceRecord] = []
    per_n: dict[int, dict] = {}
    for n in range(n_min, n_max + 1):
        run = enumerate_quadrangulations(n, limit=limit, workers=workers)
        if wiener_fn is None and workers > 1 and run.count > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                level_records = list(
                    pool.map(_audit_worker, [(kind, r) for r in run.records], chunksize=8)
                )
        else:
            fn = wiener_fn or wiener_index
            level_records = [_AUDITORS[kind](q, fn) for q in run.graphs()]
        qn_code = canonical_code(build_qn(n)).hex()
        extremal = sorted(r.code_hex for r in level_records if r.slack == 0)
        per_n[n] = {
            "count": run.count,
            "extremal": extremal,
            "qn_code": qn_code,
            "qn_attained": qn_code in extremal,
        }
        records.extend(level_records)

    worst = max(records, key=lambda r: r.slack)
    bad = [r for r in records if not r.ok]
    qn_everywhere = all(info["qn_attained"] for info in per_n.values())
    summary = {
        "instances": len(records),
        "per_n": per_n,
        "max_slack": {"n": worst.n, "code": worst.code_hex, "slack": worst.slack},
        "qn_attained_everywhere": qn_everywhere,
        "three_connected_with_separating_cycle": sum(
            1 for r in records if r.three_connected and r.separating_cycles
        ),
        "failing_instances": len(bad),
        "level_checks": sum(r.level_checked for r in records),
        "certificates": sum(r.cert_total for r in records),
    }
    return VerificationReport(
        kind=kind,
        n_min=n_min,
        n_max=n_max,
        records=tuple(records),
        summary=summary,
        ok=not bad and qn_everywhere,
    )
