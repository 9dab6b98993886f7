"""JSON loading and emission with exact value parsing.

Distances are parsed exactly: integers, ``"p/q"`` strings, decimal
literals (read as decimals, never floats) and ``"inf"``.  They are
rendered back as ``"p/q"`` or ``"inf"``.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Any, Hashable, Mapping

from .lattice import LatticeError, SupLattice
from .fixtures import preorder_category
from .hausdorff import conical_certificate
from .presheaf import Presheaf
from .qcat import Distributor, InvalidCategory, QCategory, object_key
from .quantaloid import INF, LAWVERE, Quantaloid, QuantaloidError, TableQuantaloid, builtin


class ParseError(ValueError):
    pass


class TriangleViolation(InvalidCategory):
    pass


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
    return parse_json(text, str(path))


def parse_json(text: str, where: str = "<input>") -> Any:
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise ParseError(f"{where}: invalid JSON at line {e.lineno}: {e.msg}") from None


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# values


def parse_distance(raw: Any) -> Any:
    if isinstance(raw, bool):
        raise ParseError(f"not a distance: {raw!r}")
    if isinstance(raw, str):
        s = raw.strip()
        if s.lower() in ("inf", "infinity", "+inf"):
            return INF
        try:
            q = Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a distance: {raw!r}") from None
    elif isinstance(raw, (int, Decimal)):
        if isinstance(raw, Decimal) and not raw.is_finite():
            raise ParseError(f"not a distance: {raw!r}")
        q = Fraction(raw)
    else:
        raise ParseError(f"not a distance: {raw!r}")
    if q < 0:
        raise ParseError(f"negative distance: {raw!r}")
    return q


def parse_value(Q: Quantaloid, x: str, y: str, raw: Any) -> Any:
    """Parse a hom value for an arrow ``x -> y``."""
    if Q is LAWVERE:
        return parse_distance(raw)
    if isinstance(raw, bool):
        v = "true" if raw else "false"
    elif isinstance(raw, (int, str)):
        v = str(raw)
    else:
        raise ParseError(f"not a lattice element: {raw!r}")
    if not Q.contains(x, y, v):
        raise ParseError(f"{v!r} is not an arrow {x}->{y} of {Q.name}")
    return v


def render_value(Q: Quantaloid, v: Any) -> str:
    return Q.render(v)


def render_distance(v: Any) -> str:
    return LAWVERE.render(v)


# ---------------------------------------------------------------------------
# quantaloids


def load_quantaloid(ref: Any) -> Quantaloid:
    if isinstance(ref, str):
        try:
            return builtin(ref)
        except (QuantaloidError, ValueError) as e:
            raise ParseError(str(e)) from None
    if isinstance(ref, Mapping):
        try:
            return TableQuantaloid.from_json(ref)
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed quantaloid: missing or bad field {e}") from None
        except LatticeError as e:
            raise ParseError(f"malformed hom lattice: {e}") from None
    raise ParseError(f"quantaloid reference must be a name or an object, got {ref!r}")


def quantaloid_ref(Q: Quantaloid) -> Any:
    try:
        if builtin(Q.name) is Q:
            return Q.name
    except (QuantaloidError, ValueError):
        pass
    return Q.to_json()


# ---------------------------------------------------------------------------
# categories


def _split(key: str, what: str) -> tuple[str, str]:
    parts = key.split("|")
    if len(parts) != 2:
        raise ParseError(f"{what} key {key!r} must look like 'x|y'")
    return parts[0], parts[1]


def _names(raw: Any, what: str) -> list[str]:
    if not isinstance(raw, list):
        raise ParseError(f"{what} must be a list")
    names = [str(x) for x in raw]
    for n in names:
        if "|" in n:
            raise ParseError(f"{what} name {n!r} contains '|'")
    if len(set(names)) != len(names):
        raise ParseError(f"duplicate {what} names")
    return names


def category_from_json(data: Mapping, Q: Quantaloid | None = None, check: bool = True) -> QCategory:
    if not isinstance(data, Mapping):
        raise ParseError("a category must be a JSON object")
    if data.get("kind") == "preorder":
        return preorder_from_json(data, check=check)
    if "points" in data:
        return metric_space_from_json(data)
    Q = Q or load_quantaloid(data.get("quantaloid", "bool"))
    objects = _names(data.get("objects"), "object")
    types = data.get("types")
    if types is None:
        if len(Q.objects) != 1:
            raise ParseError("types are required over a multi-object quantaloid")
        types = {a: Q.objects[0] for a in objects}
    types = {str(k): str(v) for k, v in types.items()}
    for a in objects:
        if a not in types:
            raise ParseError(f"object {a} has no type")
        if types[a] not in Q.objects:
            raise ParseError(f"type {types[a]} of {a} is not an object of {Q.name}")
    raw = data.get("hom")
    if not isinstance(raw, Mapping):
        raise ParseError("hom must be an object keyed by 'x|y'")
    hom = {}
    for key, v in raw.items():
        x, y = _split(key, "hom")
        if x not in types or y not in types:
            raise ParseError(f"hom key {key!r} mentions an unknown object")
        hom[x, y] = parse_value(Q, types[y], types[x], v)
    for x, y in product(objects, repeat=2):
        if (x, y) not in hom:
            hom[x, y] = Q.bottom(types[y], types[x])
    return QCategory(Q, objects, types, hom, name=str(data.get("name", "A")), check=check)


def category_to_json(A: QCategory, names: Mapping[Hashable, str] | None = None) -> dict:
    names = names or {a: str(a) for a in A.objects}
    Q = A.Q
    return {
        "quantaloid": quantaloid_ref(Q),
        "name": A.name,
        "objects": [names[a] for a in A.objects],
        "types": {names[a]: A.t(a) for a in A.objects},
        "hom": {f"{names[x]}|{names[y]}": Q.render(A.hom(x, y)) for x in A.objects for y in A.objects},
    }


def metric_space_from_json(data: Mapping) -> QCategory:
    """Load ``{"points", "distances", "profile"}``.

    The ``metric`` profile (default) requires zero self-distances and the
    triangle inequality; the ``generalized`` profile closes the matrix
    instead: self-distances become 0 and every entry is lowered to its
    shortest-path value.
    """
    points = _names(data.get("points"), "point")
    rows = data.get("distances")
    n = len(points)
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise ParseError(f"distances must be a {n}x{n} matrix")
    d = [[parse_distance(v) for v in r] for r in rows]
    profile = data.get("profile", "metric")
    if profile not in ("metric", "generalized"):
        raise ParseError(f"unknown profile {profile!r}")
    if profile == "metric":
        problems = []
        for i in range(n):
            if d[i][i] != 0:
                problems.append(f"nonzero self-distance at {points[i]}")
        for i, j, k in product(range(n), repeat=3):
            if LAWVERE.comp("*", "*", "*", d[j][k], d[i][j]) < d[i][k]:
                problems.append(f"triangle inequality fails at ({points[i]},{points[j]},{points[k]})")
        if problems:
            raise TriangleViolation(problems)
    else:
        for i in range(n):
            d[i][i] = Fraction(0)
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    via = LAWVERE.comp("*", "*", "*", d[k][j], d[i][k])
                    if via < d[i][j]:
                        d[i][j] = via
    idx = {p: i for i, p in enumerate(points)}
    return QCategory(LAWVERE, points, {p: "*" for p in points},
                     {(x, y): d[idx[x]][idx[y]] for x in points for y in points},
                     name=str(data.get("name", "M")), check=False)


def preorder_from_json(data: Mapping, check: bool = True) -> QCategory:
    """Load ``{"kind": "preorder", "elements", "leq"}``; ``"close": true`` takes the reflexive-transitive closure."""

    elements = _names(data.get("elements"), "element")
    pairs = set()
    for p in data.get("leq", []):
        if not isinstance(p, list) or len(p) != 2:
            raise ParseError(f"order pair {p!r} must be [x, y]")
        x, y = str(p[0]), str(p[1])
        if x not in elements or y not in elements:
            raise ParseError(f"order pair {p!r} mentions an unknown element")
        pairs.add((x, y))
    if data.get("close"):
        pairs |= {(e, e) for e in elements}
        for k in elements:
            for i in elements:
                for j in elements:
                    if (i, k) in pairs and (k, j) in pairs:
                        pairs.add((i, j))
    else:
        problems = [f"reflexivity fails at {e}" for e in elements if (e, e) not in pairs]
        for i, j, k in product(elements, repeat=3):
            if (i, j) in pairs and (j, k) in pairs and (i, k) not in pairs:
                problems.append(f"transitivity fails at ({i},{j},{k})")
        if problems:
            raise InvalidCategory(problems)
    return preorder_category(elements, lambda x, y: (x, y) in pairs, name=str(data.get("name", "P")))


# ---------------------------------------------------------------------------
# distributors and presheaves


def distributor_from_json(data: Mapping) -> Distributor:
    Q = load_quantaloid(data.get("quantaloid", "bool"))
    try:
        A = category_from_json(data["dom"], Q)
        B = category_from_json(data["cod"], Q)
    except KeyError as e:
        raise ParseError(f"distributor needs {e}") from None
    raw = data.get("matrix")
    if not isinstance(raw, Mapping):
        raise ParseError("matrix must be an object keyed by 'b|a'")
    m = {}
    for key, v in raw.items():
        b, a = _split(key, "matrix")
        if b not in B.types or a not in A.types:
            raise ParseError(f"matrix key {key!r} mentions an unknown object")
        m[b, a] = parse_value(Q, A.t(a), B.t(b), v)
    for b, a in product(B.objects, A.objects):
        if (b, a) not in m:
            m[b, a] = Q.bottom(A.t(a), B.t(b))
    return Distributor(A, B, m, name=str(data.get("name", "Phi")))


def distributor_to_json(Phi: Distributor, dom_names: Mapping | None = None, cod_names: Mapping | None = None
                        ) -> dict:
    A, B, Q = Phi.dom, Phi.cod, Phi.Q
    dn = dom_names or {a: str(a) for a in A.objects}
    cn = cod_names or {b: str(b) for b in B.objects}
    return {
        "quantaloid": quantaloid_ref(Q),
        "name": Phi.name,
        "dom": category_to_json(A, dn),
        "cod": category_to_json(B, cn),
        "matrix": {f"{cn[b]}|{dn[a]}": Q.render(Phi(b, a)) for b in B.objects for a in A.objects},
    }


def presheaf_from_json(data: Mapping) -> Presheaf:
    try:
        A = category_from_json(data["base"])
        X = str(data.get("type", A.Q.objects[0]))
        raw = data["values"]
    except KeyError as e:
        raise ParseError(f"presheaf needs {e}") from None
    if X not in A.Q.objects:
        raise ParseError(f"type {X} is not an object of {A.Q.name}")
    vals = {}
    for a in A.objects:
        vals[a] = parse_value(A.Q, X, A.t(a), raw[a]) if a in raw else A.Q.bottom(X, A.t(a))
    try:
        return Presheaf(A, X, vals, check=True)
    except QuantaloidError as e:
        raise InvalidCategory([str(e)]) from None


def presheaf_to_json(phi: Presheaf, names: Mapping | None = None) -> dict:
    A = phi.base
    names = names or {a: str(a) for a in A.objects}
    return {
        "base": category_to_json(A, names),
        "type": phi.q_type,
        "values": {names[a]: A.Q.render(v) for a, v in phi.items()},
    }


def generator_name(A: QCategory, gens, X: str) -> str:
    body = "{" + ",".join(str(a) for a in gens) + "}"
    return f"{X}:{body}" if len(A.Q.objects) > 1 else body


def presheaf_names(A: QCategory, objs) -> dict:
    """Readable unique names for presheaf objects: their canonical generator sets when conical."""

    out, used = {}, set()
    for k, phi in enumerate(objs):
        cert = conical_certificate(phi)
        name = generator_name(A, cert.generators, phi.q_type) if cert else f"p{k}"
        if name in used:
            name = f"{name}#{k}"
        used.add(name)
        out[phi] = name
    return out


def load_any(data: Mapping) -> tuple[str, Any]:
    """Dispatch on the shape of a JSON document."""
    if not isinstance(data, Mapping):
        raise ParseError("expected a JSON object")
    if "elements" in data and data.get("kind") != "preorder":
        try:
            return "lattice", SupLattice.from_json(data)
        except LatticeError as e:
            raise InvalidCategory([str(e)]) from None
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed lattice: {e}") from None
    if "compose" in data:
        return "quantaloid", load_quantaloid(data)
    if "matrix" in data:
        return "distributor", distributor_from_json(data)
    if "values" in data:
        return "presheaf", presheaf_from_json(data)
    if "points" in data:
        return "metric", metric_space_from_json(data)
    return "category", category_from_json(data)


__all__ = [
    "ParseError", "TriangleViolation", "category_from_json", "category_to_json", "distributor_from_json",
    "distributor_to_json", "dumps", "load_any", "load_quantaloid", "metric_space_from_json", "object_key",
    "parse_distance", "parse_json", "parse_value", "preorder_from_json", "presheaf_from_json",
    "presheaf_names", "presheaf_to_json", "quantaloid_ref", "read_json", "render_distance", "render_value",
]
