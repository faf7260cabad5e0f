"""Python view of the krgeom core. Rationals are passed as strings like "1/3"."""

import json

from . import _krgeom

normal_shift = _krgeom.normal_shift
promote = _krgeom.promote
promotion_order = _krgeom.promotion_order
walls_of_base = _krgeom.walls_of_base


def crystal(n, lam):
    return json.loads(_krgeom.crystal(n, list(lam)))


def kr_crystal(n, l, r):
    return json.loads(_krgeom.kr_crystal(n, l, r))


def verify_uniqueness(n, lam):
    return json.loads(_krgeom.verify_uniqueness(n, list(lam)))


def tensor_strings(n, factors, j):
    return json.loads(_krgeom.tensor_strings(n, list(factors), j))


def classify(point):
    return json.loads(_krgeom.classify([str(x) for x in point]))


def gaudin_family(n, factors, z, chi):
    return json.loads(_krgeom.gaudin_family(n, list(factors), [str(x) for x in z], [str(x) for x in chi]))


def compare(n, factors):
    return json.loads(_krgeom.compare(n, list(factors)))
