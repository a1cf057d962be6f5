"""Shadows of odd unimodular lattices and self-dual binary codes.

Series are indexed by quarter-exponents of q = exp(pi i t): a lattice vector of
norm k contributes at exponent 4k, a characteristic vector of norm k at k.
Exact values come back as ``int`` or ``fractions.Fraction``.
"""

import json

from ._core import (
    BinaryCode,
    Lattice,
    QSeries,
    catalog,
    catalog_names,
    characteristic_vector,
    check_congruence,
    code_catalog,
    code_catalog_names,
    code_direct_sum,
    construction_a,
    decompose,
    direct_sum,
    enumerate_norms,
    evaluate,
    extremal_theta,
    gleason_decompose,
    integer_lattice,
    is_self_dual,
    min_characteristic_norm,
    predict_code_defect,
    predict_shadow_defect,
    reduce,
    repetition_power,
    root_lattice,
    root_system,
    run_suite_json,
    shadow_enumerator,
    shadow_enumerator_string,
    shadow_from_gleason,
    shadow_norm_counts,
    shadow_series,
    split_z,
    theta_e8,
    theta_z,
    theta_z_shadow,
    verify_shadow_identity,
    verify_theta_identity,
    weight_enumerator,
    weight_enumerator_string,
)


def verify(suite="all", prec=None, max_norm=None):
    """Run a verification suite and return the parsed report."""
    return json.loads(run_suite_json(suite, prec, max_norm))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
