"""JSON interchange formats and the DOT emitter.

All scalars serialize as exact rational strings "p/q"; Gaussian values as
pairs [re, im].  The algebra document optionally carries a `cartanHint`
extension (list of sparse vectors) so that generated files drive the root
pipeline deterministically.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import GradedAlgebra, MatrixRealization
from .linalg import SMat
from .scalars import GQ, parse_rational, rational_str


def _gq_pair(z: GQ):
    return [rational_str(z.re), rational_str(z.im)]


def _pair_gq(pair) -> GQ:
    return GQ(parse_rational(pair[0]), parse_rational(pair[1]))


def _vec_to_records(v: dict):
    return [{"k": k, "re": rational_str(c.re), "im": rational_str(c.im)}
            for k, c in sorted(v.items())]


def _records_to_vec(records) -> dict:
    return {
        r["k"]: GQ(parse_rational(r["re"]), parse_rational(r["im"]))
        for r in records
    }


# --------------------------------------------------------------------------
# algebras
# --------------------------------------------------------------------------

def algebra_to_json(g: GradedAlgebra, cartan_hint=None) -> dict:
    structure = []
    for (i, j) in sorted(g.structure):
        for k, c in sorted(g.structure[(i, j)].items()):
            structure.append(
                {"i": i, "j": j, "k": k,
                 "re": rational_str(c.re), "im": rational_str(c.im)}
            )
    doc = {
        "dim": g.dim,
        "degrees": [list(d) for d in g.degrees],
        "structure": structure,
    }
    if g.labels:
        doc["labels"] = list(g.labels)
    if cartan_hint is not None:
        doc["cartanHint"] = [_vec_to_records(v) for v in cartan_hint]
    return doc


def algebra_from_json(doc: dict) -> GradedAlgebra:
    dim = doc["dim"]
    degrees = [tuple(d) for d in doc["degrees"]]
    if len(degrees) != dim:
        raise ValueError("dim does not match the degrees array")
    structure: dict = {}
    for r in doc["structure"]:
        key = (r["i"], r["j"])
        structure.setdefault(key, {})[r["k"]] = GQ(
            parse_rational(r["re"]), parse_rational(r["im"])
        )
    return GradedAlgebra(degrees, structure, labels=doc.get("labels"))


def cartan_hint_from_json(doc: dict):
    hint = doc.get("cartanHint")
    if hint is None:
        return None
    return [_records_to_vec(v) for v in hint]


# --------------------------------------------------------------------------
# matrix realizations and representations
# --------------------------------------------------------------------------

def _dense_matrix(m: SMat):
    return [[_gq_pair(m.get(i, j)) for j in range(m.ncols)] for i in range(m.nrows)]


def _matrix_from_dense(rows) -> SMat:
    m = SMat(len(rows), len(rows[0]) if rows else 0)
    for i, row in enumerate(rows):
        for j, pair in enumerate(row):
            v = _pair_gq(pair)
            if v:
                m.rows[i][j] = v
    return m


def realization_to_json(real: MatrixRealization) -> dict:
    doc = {
        "ambientDim": real.ambient_dim,
        "blockSizes": list(real.block_sizes),
        "blockDegrees": [list(d) for d in real.block_degrees],
        "matrices": [_dense_matrix(m) for m in real.matrices],
    }
    if real.labels:
        doc["labels"] = list(real.labels)
    return doc


def realization_from_json(doc: dict) -> MatrixRealization:
    return MatrixRealization(
        doc["blockSizes"],
        [tuple(d) for d in doc["blockDegrees"]],
        [_matrix_from_dense(rows) for rows in doc["matrices"]],
        labels=doc.get("labels"),
    )


def representation_to_json(rep, algebra_ref: str = "") -> dict:
    doc = {
        "algebraRef": algebra_ref,
        "dim": rep.dim,
        "matrices": [_dense_matrix(m) for m in rep.matrices],
    }
    if rep.grading is not None:
        doc["grading"] = [list(d) for d in rep.grading]
    return doc


def representation_from_json(doc: dict, g: GradedAlgebra):
    from .reps import Representation

    grading = doc.get("grading")
    return Representation(
        g,
        doc["dim"],
        [_matrix_from_dense(rows) for rows in doc["matrices"]],
        grading=[tuple(d) for d in grading] if grading is not None else None,
    )


# --------------------------------------------------------------------------
# reports
# --------------------------------------------------------------------------

def _frac_vec(v):
    return [rational_str(Fraction(x)) for x in v]


def root_system_report(rs, enhanced=None, weyl=None) -> dict:
    doc = {
        "rank": rs.rank,
        "roots": [
            {
                "alpha": _frac_vec(rd.alpha),
                "dims": [
                    {"degree": list(a), "dim": len(rd.spaces_by_degree[a])}
                    for a in rd.degrees()
                ],
                "dim": rd.dim,
            }
            for rd in rs.roots
        ],
        "zeroPart": [
            {"degree": list(a), "dim": len(v)} for a, v in sorted(rs.zero_part.items())
        ],
        "selfCentralizing": not rs.zero_part,
    }
    if rs.positive is not None:
        doc["positive"] = [_frac_vec(a) for a in rs.positive]
        doc["simple"] = [_frac_vec(a) for a in rs.simple]
        doc["rho"] = _frac_vec(rs.rho)
    if enhanced is not None:
        doc["cartanMatrix"] = [list(row) for row in enhanced.cartan_matrix]
        doc["dynkinType"] = enhanced.dynkin_type
        doc["nodeDegrees"] = [list(d) for d in enhanced.node_degrees]
    if weyl is not None:
        doc["weylOrder"] = weyl.order
    return doc


def enhanced_dynkin_report(ed) -> dict:
    return {
        "simple": [_frac_vec(a) for a in ed.simple],
        "cartanMatrix": [list(row) for row in ed.cartan_matrix],
        "dynkinType": ed.dynkin_type,
        "nodeDegrees": [list(d) for d in ed.node_degrees],
    }


def decomposition_report(components, tensor_convention: bool = False) -> dict:
    doc = {
        "components": [
            {
                "highestWeight": _frac_vec(c.highest_weight),
                "dim": c.dim,
                "casimirValue": rational_str(c.casimir_value),
                "degreeOfHighestWeightSpace": (
                    list(c.degree_of_hw_space)
                    if c.degree_of_hw_space is not None
                    else None
                ),
            }
            for c in components
        ],
        "totalDim": sum(c.dim for c in components),
    }
    if tensor_convention:
        doc["tensorConvention"] = (
            "x(v@w) = xv@w + (-1)^pairing(|x|,|v|) v@xw (artifact convention)"
        )
    return doc


def dynkin_dot(ed) -> str:
    """DOT graph: nodes "a<i> [a1a2]", edge multiplicity per the Cartan
    matrix convention (number of lines = c_ij * c_ji)."""
    lines = ["graph dynkin {"]
    n = len(ed.simple)
    for i in range(n):
        d = ed.node_degrees[i]
        lines.append(f'  n{i} [label="a{i + 1} [{d[0]}{d[1]}]"];')
    for i in range(n):
        for j in range(i + 1, n):
            m = ed.cartan_matrix[i][j] * ed.cartan_matrix[j][i]
            if m == 1:
                lines.append(f"  n{i} -- n{j};")
            elif m > 1:
                lines.append(f'  n{i} -- n{j} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
