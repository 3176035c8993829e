"""Built-in group catalog, group-file ingestion, scanning, caching, reports."""

from __future__ import annotations

import hashlib
import json
import math
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from . import __version__
from .automorphisms import verify_lemma0, verify_lemma0a
from .errors import (
    BudgetExceeded,
    ConfigError,
    NotNilpotent,
    NotPGroup,
    NotPurelyNonabelian,
    ParseError,
    SizeLimitExceeded,
    WrongClass,
)
from .groups import (
    DEFAULT_ELEMENT_CAP,
    Group,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
)
from .theory import (
    TheoremReport,
    verify_attar,
    verify_corollary1,
    verify_lemma3,
    verify_lemma4_sweep,
    verify_proposition1,
    verify_theorem,
)

CHECK_NAMES = ("theorem", "prop1", "cor1", "lemma0", "lemma0a", "lemma3", "lemma4", "attar")
PER_GROUP_CHECKS = tuple(c for c in CHECK_NAMES if c != "lemma4")
CACHE_ENV_VAR = "CENTAUTS_CACHE_DIR"

_CSV_COLUMNS = (
    "groupId",
    "check",
    "order",
    "prime",
    "class",
    "rEqS",
    "residualIso",
    "expEq",
    "all",
    "autcentOrder",
    "autZZOrder",
    "innOrder",
    "verdict",
)


# -- catalog constructions -------------------------------------------------


def _table_group(
    elements: Sequence, mul: Callable, name: str, max_order: int = DEFAULT_ELEMENT_CAP
) -> Group:
    index = {t: k for k, t in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    labels = tuple(str(t) for t in elements)
    return from_cayley_table(table, labels=labels, name=name, max_order=max_order)


def cyclic_group(k: int, name: str | None = None, max_order: int = DEFAULT_ELEMENT_CAP) -> Group:
    """C_k with element i representing the i-th power of the generator."""
    return _table_group(list(range(k)), lambda a, b: (a + b) % k, name or f"C{k}", max_order)


def abelian_group(
    factor_orders: Sequence[int],
    name: str | None = None,
    max_order: int = DEFAULT_ELEMENT_CAP,
) -> Group:
    """Direct product of cyclic groups of the given orders."""
    if not factor_orders:
        return cyclic_group(1, name or "C1")
    group = cyclic_group(factor_orders[0], max_order=max_order)
    for k in factor_orders[1:]:
        group = direct_product(group, cyclic_group(k, max_order=max_order), max_order=max_order)
    default = "x".join(f"C{k}" for k in factor_orders)
    return from_cayley_table(group.mul, labels=group.labels, name=name or default, max_order=max_order)


def dihedral_group(m: int, name: str | None = None) -> Group:
    """Dihedral group of order 2m (symmetries of the m-gon)."""
    elems = [(i, j) for j in (0, 1) for i in range(m)]

    def mul(a, b):
        i, j = a
        k, l = b
        return ((i + k) % m, l) if j == 0 else ((i - k) % m, 1 - l)

    return _table_group(elems, mul, name or f"D{2 * m}")


def dicyclic_group(m: int, name: str | None = None) -> Group:
    """Dicyclic group of order 4m; m = 2 gives the quaternion group."""
    elems = [(i, j) for j in (0, 1) for i in range(2 * m)]

    def mul(a, b):
        i, j = a
        k, l = b
        if j == 0:
            return ((i + k) % (2 * m), l)
        if l == 0:
            return ((i - k) % (2 * m), 1)
        return ((i - k + m) % (2 * m), 0)

    return _table_group(elems, mul, name or f"Dic{m}")


def metacyclic_group(n: int, m: int, r: int, name: str | None = None) -> Group:
    """The split extension <a, b | a^n = b^m = 1, b^-1 a b = a^r>."""
    if math.gcd(r, n) != 1 or pow(r, m, n) != 1:
        raise ConfigError(f"invalid metacyclic parameters n={n}, m={m}, r={r}")
    elems = [(j, i) for j in range(m) for i in range(n)]
    powers = [pow(r, j, n) for j in range(m)]

    def mul(a, b):
        j, i = a
        jp, ip = b
        return ((j + jp) % m, (i * powers[jp] + ip) % n)

    return _table_group(elems, mul, name or f"C{n}sdC{m}r{r}")


def heisenberg_group(p: int, name: str | None = None) -> Group:
    """Upper unitriangular 3x3 matrices over the field with p elements."""
    elems = [(x, y, z) for x in range(p) for y in range(p) for z in range(p)]

    def mul(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)

    return _table_group(elems, mul, name or f"Heis{p}")


def central_product(g: Group, h: Group, zg: int, zh: int, name: str) -> Group:
    """Quotient of G x H identifying the central elements zg and zh."""
    prod = direct_product(g, h, max_order=4 * DEFAULT_ELEMENT_CAP)
    diag = zg * h.n + int(h.inv[zh])
    kernel = prod.subgroup_generated([diag])
    target = prod.quotient(kernel).target
    return from_cayley_table(target.mul, name=name)


def _central_involution(group: Group) -> int:
    p = group.p_group_prime() or 2
    for z in group.center().members:
        if group.element_order(z) == p:
            return z
    raise ConfigError(f"{group.name} has no central element of order {p}")


def _cp(maker_a: Callable[[], Group], maker_b: Callable[[], Group], name: str) -> Group:
    a, b = maker_a(), maker_b()
    return central_product(a, b, _central_involution(a), _central_involution(b), name)


def catalog() -> dict[str, Callable[[], Group]]:
    """Named constructors for the built-in corpus, in deterministic order.

    The corpus mixes the class-2 study subjects (dihedral/quaternion groups,
    modular and extraspecial-style groups, Heisenberg groups, products and
    central products) with abelian, higher-class, and non-prime-power
    negative controls.
    """

    def named(name: str, maker: Callable[[], Group]) -> Callable[[], Group]:
        def build() -> Group:
            g = maker()
            return g if g.name == name else from_cayley_table(g.mul, labels=g.labels, name=name)

        return build

    entries: dict[str, Callable[[], Group]] = {}

    def add(name: str, maker: Callable[[], Group]) -> None:
        entries[name] = named(name, maker)

    # abelian p-groups (controls for the non-abelian criteria)
    add("C2", lambda: cyclic_group(2))
    add("C4", lambda: cyclic_group(4))
    add("C8", lambda: cyclic_group(8))
    add("C16", lambda: cyclic_group(16))
    add("C2xC2", lambda: abelian_group([2, 2]))
    add("C2xC4", lambda: abelian_group([2, 4]))
    add("C4xC4", lambda: abelian_group([4, 4]))
    add("C2xC2xC2", lambda: abelian_group([2, 2, 2]))
    add("C3", lambda: cyclic_group(3))
    add("C9", lambda: cyclic_group(9))
    add("C27", lambda: cyclic_group(27))
    add("C3xC3", lambda: abelian_group([3, 3]))
    add("C3xC9", lambda: abelian_group([3, 9]))
    add("C5", lambda: cyclic_group(5))

    # class-2 2-groups
    add("D8", lambda: dihedral_group(4))
    add("Q8", lambda: dicyclic_group(2))
    add("M16", lambda: metacyclic_group(8, 2, 5))
    add("M32", lambda: metacyclic_group(16, 2, 9))
    add("C4sdC4", lambda: metacyclic_group(4, 4, 3))
    add("D8cpC4", lambda: _cp(lambda: dihedral_group(4), lambda: cyclic_group(4), "D8cpC4"))
    add("D8xC2", lambda: direct_product(dihedral_group(4), cyclic_group(2)))
    add("Q8xC2", lambda: direct_product(dicyclic_group(2), cyclic_group(2)))
    add("D8xC4", lambda: direct_product(dihedral_group(4), cyclic_group(4)))
    add("Q8xC4", lambda: direct_product(dicyclic_group(2), cyclic_group(4)))
    add("M16xC2", lambda: direct_product(metacyclic_group(8, 2, 5), cyclic_group(2)))
    add("C4sdC4xC2", lambda: direct_product(metacyclic_group(4, 4, 3), cyclic_group(2)))
    add("D8xC2xC2", lambda: direct_product(direct_product(dihedral_group(4), cyclic_group(2)), cyclic_group(2)))
    add("Q8xC2xC2", lambda: direct_product(direct_product(dicyclic_group(2), cyclic_group(2)), cyclic_group(2)))
    add("D8cpD8", lambda: _cp(lambda: dihedral_group(4), lambda: dihedral_group(4), "D8cpD8"))
    add("D8cpQ8", lambda: _cp(lambda: dihedral_group(4), lambda: dicyclic_group(2), "D8cpQ8"))
    add("D8xC8", lambda: direct_product(dihedral_group(4), cyclic_group(8)))
    add("M16xC4", lambda: direct_product(metacyclic_group(8, 2, 5), cyclic_group(4)))
    add("D8xQ8", lambda: direct_product(dihedral_group(4), dicyclic_group(2)))
    add("D8xD8", lambda: direct_product(dihedral_group(4), dihedral_group(4)))
    add("Q8xQ8", lambda: direct_product(dicyclic_group(2), dicyclic_group(2)))
    add("D8cpD8xC2", lambda: direct_product(
        _cp(lambda: dihedral_group(4), lambda: dihedral_group(4), "D8cpD8"), cyclic_group(2)))

    # class-2 odd-order groups
    add("Heis3", lambda: heisenberg_group(3))
    add("M27", lambda: metacyclic_group(9, 3, 4))
    add("Heis3xC3", lambda: direct_product(heisenberg_group(3), cyclic_group(3)))
    add("M27xC3", lambda: direct_product(metacyclic_group(9, 3, 4), cyclic_group(3)))
    add("C9sdC9", lambda: metacyclic_group(9, 9, 4))
    add("Heis3cpC9", lambda: central_product(
        heisenberg_group(3), cyclic_group(9), 2, 3, "Heis3cpC9"))
    add("Heis5", lambda: heisenberg_group(5))

    # higher-class and non-prime-power controls
    add("D16", lambda: dihedral_group(8))
    add("SD16", lambda: metacyclic_group(8, 2, 3))
    add("Q16", lambda: dicyclic_group(4))
    add("D32", lambda: dihedral_group(16))
    add("S3", lambda: dihedral_group(3))
    add("C6", lambda: cyclic_group(6))

    return entries


def catalog_group(name: str) -> Group:
    entries = catalog()
    if name not in entries:
        raise ParseError(f"unknown catalog group {name!r}")
    return entries[name]()


# -- group files -----------------------------------------------------------


def serialize_group(group: Group, name: str | None = None) -> dict:
    """Canonical group-file document (cayley format) for the given group."""
    return {
        "name": name or group.name,
        "format": "cayley",
        "n": group.n,
        "table": [[int(v) for v in row] for row in group.mul],
    }


def group_file_text(group: Group, name: str | None = None) -> str:
    return json.dumps(serialize_group(group, name), sort_keys=True, indent=2) + "\n"


def _parse_group_document(doc, max_order: int) -> Group:
    if not isinstance(doc, dict):
        raise ParseError(f"group document must be an object, got {type(doc).__name__}")
    fmt = doc.get("format")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("field 'name' must be a string")
    if fmt == "cayley":
        if "table" not in doc:
            raise ParseError("cayley format requires field 'table'")
        table = doc["table"]
        if "n" in doc and (not isinstance(doc["n"], int) or doc["n"] != len(table)):
            raise ParseError(f"field 'n' ({doc.get('n')}) does not match the table size")
        return from_cayley_table(table, name=name, max_order=max_order)
    if fmt == "perm":
        if "degree" not in doc or "generators" not in doc:
            raise ParseError("perm format requires fields 'degree' and 'generators'")
        if not isinstance(doc["degree"], int):
            raise ParseError("field 'degree' must be an integer")
        return from_permutation_generators(
            doc["degree"], doc["generators"], name=name, max_order=max_order
        )
    if fmt == "product":
        factors = doc.get("factors")
        if not isinstance(factors, list) or not factors:
            raise ParseError("product format requires a non-empty list field 'factors'")
        parts = []
        for k, factor in enumerate(factors):
            if isinstance(factor, str):
                parts.append(catalog_group(factor))
            elif isinstance(factor, dict):
                parts.append(_parse_group_document(factor, max_order))
            else:
                raise ParseError(f"factor {k} must be a catalog name or a nested document")
        group = parts[0]
        for part in parts[1:]:
            group = direct_product(group, part, max_order=max_order)
        if name is not None:
            group = from_cayley_table(group.mul, labels=group.labels, name=name, max_order=max_order)
        return group
    raise ParseError(f"unknown group format {fmt!r} (expected cayley, perm, or product)")


def parse_group_text(text: str, max_order: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Parse a group-file document from a JSON string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return _parse_group_document(doc, max_order)


def parse_group_file(path: str | Path, max_order: int = DEFAULT_ELEMENT_CAP) -> Group:
    """Parse a group-file document from disk."""
    text = Path(path).read_text(encoding="utf-8")
    group = parse_group_text(text, max_order)
    if group.name == f"G{group.n}":
        group = from_cayley_table(
            group.mul, labels=group.labels, name=Path(path).stem, max_order=max_order
        )
    return group


# -- run configuration and scanning ----------------------------------------


@dataclass(frozen=True)
class RunConfig:
    """Parameters for a corpus scan."""

    max_order: int = 64
    primes: tuple[int, ...] = (2, 3, 5)
    checks: tuple[str, ...] = CHECK_NAMES
    output_format: str = "json"
    cache_dir: str | None = None
    budget: int = 10_000_000

    def __post_init__(self) -> None:
        if not self.checks:
            raise ConfigError("the check set must not be empty")
        bad = [c for c in self.checks if c not in CHECK_NAMES]
        if bad:
            raise ConfigError(f"unknown checks: {bad}; known: {list(CHECK_NAMES)}")
        if self.max_order < 1 or self.max_order > DEFAULT_ELEMENT_CAP:
            raise ConfigError(
                f"max_order must be within [1, {DEFAULT_ELEMENT_CAP}], got {self.max_order}"
            )
        if self.output_format not in ("json", "csv"):
            raise ConfigError(f"output format must be json or csv, got {self.output_format!r}")
        if not self.primes:
            raise ConfigError("the prime list must not be empty")

    def resolved_cache_dir(self) -> Path | None:
        override = os.environ.get(CACHE_ENV_VAR)
        if override:
            return Path(override)
        return Path(self.cache_dir) if self.cache_dir else None


def analyze_group(group: Group, checks: Sequence[str], budget: int | None = None) -> TheoremReport:
    """Run the enabled per-group checks and aggregate them into one report.

    Inapplicable hypotheses (wrong class, non-p-groups, abelian groups for
    the non-abelian statements) are recorded as not-applicable; budget and
    size blowups are captured as an error verdict instead of propagating.
    """
    try:
        klass = group.nilpotency_class()
    except NotNilpotent:
        klass = None
    report = TheoremReport(
        group_id=group.name,
        order=group.n,
        prime=group.p_group_prime(),
        nilpotency_class=klass,
        condition=None,
        oracle=None,
    )
    not_applicable = (WrongClass, NotPGroup, NotPurelyNonabelian, NotNilpotent)
    errors: list[str] = []

    for check in checks:
        if check == "lemma4":
            continue
        try:
            if check == "theorem":
                sub = verify_theorem(group, budget)
                report.condition = sub.condition
                report.oracle = sub.oracle
                report.witness = sub.witness
                status = "pass" if sub.verdict == "agree" else "fail"
            elif check == "prop1":
                rows = verify_proposition1(group, budget)
                status = "pass" if all(r.agree for r in rows) else "fail"
            elif check == "cor1":
                status = "pass" if verify_corollary1(group, budget).agree else "fail"
            elif check == "lemma0":
                sub0 = verify_lemma0(group, group.center(), budget)
                status = "not-applicable" if sub0.status == "hypothesis-fails" else sub0.status
            elif check == "lemma0a":
                status = verify_lemma0a(group, budget).status
            elif check == "lemma3":
                status = "pass" if verify_lemma3(group, budget).agree else "fail"
            elif check == "attar":
                status = "pass" if verify_attar(group, budget).agree else "fail"
            else:
                raise ConfigError(f"unknown check {check!r}")
        except not_applicable:
            status = "not-applicable"
        except (BudgetExceeded, SizeLimitExceeded) as exc:
            status = "error"
            errors.append(f"{check}: {exc}")
        report.lemma_checks[check] = status

    if any(v == "fail" for v in report.lemma_checks.values()):
        report.verdict = "COUNTEREXAMPLE"
    elif errors:
        report.verdict = "error"
        report.error = "; ".join(errors)
    else:
        report.verdict = "agree"
    return report


def _sweep_report(prime: int, max_exp: int) -> TheoremReport:
    sweep = verify_lemma4_sweep(prime, max_exp)
    report = TheoremReport(
        group_id=f"lemma4-sweep-p{prime}",
        order=prime**max_exp,
        prime=prime,
        nilpotency_class=None,
        condition=None,
        oracle=None,
        lemma_checks={"lemma4": "pass" if sweep.agree else "fail"},
        verdict="agree" if sweep.agree else "COUNTEREXAMPLE",
    )
    if not sweep.agree:
        report.witness = {"failures": list(sweep.failures)}
    return report


def report_to_json_dict(report: TheoremReport) -> dict:
    doc = {
        "groupId": report.group_id,
        "order": report.order,
        "prime": report.prime,
        "class": report.nilpotency_class,
        "conditionSide": report.condition.to_json() if report.condition else None,
        "oracleSide": report.oracle.to_json() if report.oracle else None,
        "lemmaChecks": dict(sorted(report.lemma_checks.items())),
        "verdict": report.verdict,
    }
    if report.error is not None:
        doc["error"] = report.error
    if report.witness is not None:
        doc["witness"] = report.witness
    return doc


def _report_from_json_dict(doc: dict) -> TheoremReport:
    from .theory import ConditionSide, OracleSide

    cond = doc.get("conditionSide")
    orc = doc.get("oracleSide")
    return TheoremReport(
        group_id=doc["groupId"],
        order=doc["order"],
        prime=doc["prime"],
        nilpotency_class=doc["class"],
        condition=ConditionSide(cond["rEqS"], cond["residualIso"], cond["expEq"]) if cond else None,
        oracle=OracleSide(
            orc["autcentOrder"],
            orc["autZZOrder"],
            orc["innOrder"],
            orc["autcentEqualsAutZZ"],
            orc["autcentEqualsInn"],
        )
        if orc
        else None,
        lemma_checks=dict(doc.get("lemmaChecks", {})),
        verdict=doc["verdict"],
        error=doc.get("error"),
        witness=doc.get("witness"),
    )


def _cache_key(group: Group, checks: Sequence[str], budget: int) -> str:
    payload = json.dumps(
        {
            "version": __version__,
            "group": serialize_group(group),
            "checks": sorted(set(checks)),
            "budget": budget,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _cache_read(cache_dir: Path, key: str) -> TheoremReport | None:
    path = cache_dir / f"{key}.json"
    if not path.exists():
        return None
    try:
        return _report_from_json_dict(json.loads(path.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, KeyError):
        return None


def _cache_write(cache_dir: Path, key: str, report: TheoremReport) -> None:
    cache_dir.mkdir(parents=True, exist_ok=True)
    payload = json.dumps(report_to_json_dict(report), sort_keys=True, indent=2)
    fd, tmp_name = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(tmp_name, cache_dir / f"{key}.json")
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def scan_corpus(cfg: RunConfig, extra_groups: Sequence[Group] = ()) -> list[TheoremReport]:
    """Run the enabled checks over the catalog (plus extra groups) within caps.

    Reports come back in catalog order followed by the extra groups and the
    Hom-growth sweeps; per-group failures never abort the scan.
    """
    cache_dir = cfg.resolved_cache_dir()
    reports: list[TheoremReport] = []

    def run_one(group: Group) -> TheoremReport:
        if cache_dir is not None:
            key = _cache_key(group, cfg.checks, cfg.budget)
            cached = _cache_read(cache_dir, key)
            if cached is not None:
                return cached
        report = analyze_group(group, cfg.checks, cfg.budget)
        if cache_dir is not None:
            _cache_write(cache_dir, key, report)
        return report

    for name, make in catalog().items():
        group = make()
        if group.n > cfg.max_order:
            continue
        prime = group.p_group_prime()
        if prime is not None and prime not in cfg.primes:
            continue
        reports.append(run_one(group))

    for group in extra_groups:
        if group.n > cfg.max_order:
            continue
        reports.append(run_one(group))

    if "lemma4" in cfg.checks:
        for prime in cfg.primes:
            max_exp = 0
            while prime ** (max_exp + 1) <= cfg.max_order:
                max_exp += 1
            if max_exp >= 1:
                reports.append(_sweep_report(prime, max_exp))
    return reports


def emit_report(reports: Sequence[TheoremReport], output_format: str = "json") -> str:
    """Serialize reports; identical inputs always produce identical bytes."""
    if output_format == "json":
        doc = {
            "artifactVersion": __version__,
            "reports": [report_to_json_dict(r) for r in reports],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if output_format == "csv":
        lines = [",".join(_CSV_COLUMNS)]
        for r in reports:
            cond = r.condition.to_json() if r.condition else {}
            orc = r.oracle.to_json() if r.oracle else {}
            for check in sorted(r.lemma_checks):
                row = {
                    "groupId": r.group_id,
                    "check": check,
                    "order": r.order,
                    "prime": r.prime,
                    "class": r.nilpotency_class,
                    "rEqS": cond.get("rEqS"),
                    "residualIso": cond.get("residualIso"),
                    "expEq": cond.get("expEq"),
                    "all": cond.get("all"),
                    "autcentOrder": orc.get("autcentOrder"),
                    "autZZOrder": orc.get("autZZOrder"),
                    "innOrder": orc.get("innOrder"),
                    "verdict": r.lemma_checks[check],
                }
                lines.append(
                    ",".join("" if row[c] is None else str(row[c]) for c in _CSV_COLUMNS)
                )
        return "\n".join(lines) + "\n"
    raise ConfigError(f"unknown output format {output_format!r}")


def has_failures(reports: Iterable[TheoremReport]) -> bool:
    return any(r.verdict in ("COUNTEREXAMPLE", "error") for r in reports)
