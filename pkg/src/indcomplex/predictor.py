"""Closed-form wedge-of-spheres descriptors for every supported family.

A descriptor is either a point or a finite multiset of sphere dimensions;
descriptor arithmetic (wedge merge, suspension, expected homology, Euler
characteristic) lets the recursions among the families be checked as
exact identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import FamilySpec
from .homology import HomologyProfile


class UnsupportedFamilyError(ValueError):
    """Raised when no closed formula is in scope for the given spec."""


@dataclass(frozen=True)
class WedgeDescriptor:
    """Point, or a wedge with spheres[dim] = count (counts >= 1)."""

    spheres: tuple[tuple[int, int], ...] = ()

    @classmethod
    def point(cls) -> "WedgeDescriptor":
        return cls(())

    @classmethod
    def wedge(cls, counts: dict[int, int]) -> "WedgeDescriptor":
        clean = {d: c for d, c in counts.items() if c}
        for d, c in clean.items():
            if d < 0 or c < 0:
                raise ValueError("bad sphere multiset %r" % (counts,))
        return cls(tuple(sorted(clean.items())))

    @classmethod
    def sphere(cls, dim: int, count: int = 1) -> "WedgeDescriptor":
        return cls.wedge({dim: count})

    @property
    def is_point(self) -> bool:
        return not self.spheres

    def counts(self) -> dict[int, int]:
        return dict(self.spheres)

    def suspend(self, times: int = 1) -> "WedgeDescriptor":
        return WedgeDescriptor.wedge({d + times: c for d, c in self.spheres})

    def merge(self, other: "WedgeDescriptor") -> "WedgeDescriptor":
        out = self.counts()
        for d, c in other.spheres:
            out[d] = out.get(d, 0) + c
        return WedgeDescriptor.wedge(out)

    def __str__(self):
        if self.is_point:
            return "point"
        return " v ".join(
            "S^%d" % d if c == 1 else "%d*S^%d" % (c, d)
            for d, c in self.spheres)

    def to_json(self) -> dict:
        if self.is_point:
            return {"shape": "point"}
        return {"shape": "wedge",
                "spheres": {str(d): c for d, c in self.spheres}}

    @classmethod
    def from_json(cls, obj: dict) -> "WedgeDescriptor":
        if obj["shape"] == "point":
            return cls.point()
        return cls.wedge({int(d): c for d, c in obj["spheres"].items()})


def descriptor_homology(d: WedgeDescriptor) -> HomologyProfile:
    """Free reduced homology of a wedge of spheres."""
    return HomologyProfile(coeff="z", betti=d.counts())


def descriptor_euler(d: WedgeDescriptor, reduced: bool = False) -> int:
    chi = sum(c if dim % 2 == 0 else -c for dim, c in d.spheres)
    return chi if reduced else chi + 1


# --- per-family formulas --------------------------------------------------

_PT = WedgeDescriptor.point()


def _sphere(dim: int, count: int = 1) -> WedgeDescriptor:
    if count == 0:
        return _PT
    if dim < 0:
        raise UnsupportedFamilyError("negative sphere dimension")
    return WedgeDescriptor.sphere(dim, count)


def predict_path(n: int) -> WedgeDescriptor:
    k, r = divmod(n, 3)
    if r == 0:
        return _sphere(k - 1)
    if r == 1:
        return _PT
    return _sphere(k)


def predict_cycle(n: int) -> WedgeDescriptor:
    k, r = divmod(n, 3)
    if r == 0:
        return _sphere(k - 1, 2)
    if r == 1:
        return _sphere(k - 1)
    return _sphere(k)


def predict_grid2(n: int) -> WedgeDescriptor:
    k, r = divmod(n, 2)
    return _sphere(k - 1) if r == 0 else _sphere(k)


def predict_grid3(n: int) -> WedgeDescriptor:
    k, l = divmod(n, 4)
    return _sphere(3 * k + l - 1)


def predict_x3(n: int) -> WedgeDescriptor:
    if n % 2 == 1:
        return _PT
    k, r = divmod(n, 4)
    return _sphere(3 * k - 1) if r == 0 else _sphere(3 * k + 1)


def predict_y3(n: int) -> WedgeDescriptor:
    if n % 2 == 1:
        return _PT
    k, r = divmod(n, 4)
    return _sphere(3 * k - 1) if r == 0 else _sphere(3 * k)


def predict_x4(n: int) -> WedgeDescriptor:
    return _PT if n % 3 == 1 else _sphere(n - 1)


def predict_y4(n: int) -> WedgeDescriptor:
    return _PT if n % 3 == 2 else _sphere(n - 1)


def predict_x5(n: int) -> WedgeDescriptor:
    if n % 2 == 1:
        return _PT
    l, r = divmod(n, 4)
    return _sphere(5 * l - 1) if r == 0 else _sphere(5 * l + 2)


def predict_y5(n: int) -> WedgeDescriptor:
    if n % 2 == 1:
        return _PT
    l, r = divmod(n, 4)
    return _sphere(5 * l - 1) if r == 0 else _sphere(5 * l + 1)


def predict_grid4(n: int) -> WedgeDescriptor:
    k, l = divmod(n, 6)
    if l == 1:
        return _sphere(n - 1, 2 * k)
    if l == 4:
        return _sphere(n - 1, 2 * k + 2)
    return _sphere(n - 1, 2 * k + 1)


def _kappa(k: int) -> int:
    return 0 if k <= 1 else 1


def predict_A_minus_v(n: int, k: int) -> WedgeDescriptor:
    if n < 3 or k < 0:
        raise UnsupportedFamilyError("A-v needs n >= 3, k >= 0")
    if n % 2 == 1:
        return _PT
    copies = 1 + _kappa(k)
    l, r = divmod(n, 4)
    dim = 5 * k + 5 * l - 1 if r == 0 else 5 * k + 5 * l + 2
    return _sphere(dim, copies)


def predict_B_prime(k: int) -> WedgeDescriptor:
    if k < 1:
        raise UnsupportedFamilyError("B' needs k >= 1")
    return _sphere(0) if k == 1 else _sphere(5 * k - 5, 2)


def predict_B(k: int) -> WedgeDescriptor:
    if k < 1:
        raise UnsupportedFamilyError("B needs k >= 1")
    return _sphere(4) if k == 1 else _sphere(5 * k - 1, 2)


def _wedge_range(lo: int, hi: int, per: int) -> WedgeDescriptor:
    """4-fold (or per-fold) spheres over dimensions lo..hi inclusive."""
    return WedgeDescriptor.wedge({i: per for i in range(lo, hi + 1)})


def predict_A(n: int, k: int) -> WedgeDescriptor:
    """Homotopy type of the block-extended 5-row family."""
    if n < 1 or k < 0:
        raise UnsupportedFamilyError("A needs n >= 1, k >= 0")
    if n <= 5:
        return _predict_A_small(n, k)
    if n % 2 == 1:
        return predict_A(n - 5, k + 1).suspend()
    if n % 4 == 2:
        return _predict_A_eps2(n, k)
    if n >= 8:
        return _predict_A_eps0(n, k)
    raise UnsupportedFamilyError("unreachable A parameter n=%d" % n)


def _predict_A_small(n: int, k: int) -> WedgeDescriptor:
    if n == 1:
        return _sphere(1) if k == 0 else _PT
    if n == 2:
        return _sphere(5 * k + 2, 1 + _kappa(k))
    if n == 3:
        return _sphere(5 * k + 3, 1 if k == 0 else 2)
    if n == 4:
        return _sphere(5 * k + 4, 1 + _kappa(k))
    return _sphere(5 * k + 5, 1 if k == 0 else 2)


def _predict_A_eps0(n: int, k: int) -> WedgeDescriptor:
    # n = 20t + 4l, n >= 8
    t, rem = divmod(n, 20)
    l = rem // 4
    kap = _kappa(k)
    top = 25 * t + 5 * l + 5 * k - 1
    out = _sphere(top, 3 + kap)
    if l in (0, 1):
        out = out.merge(_wedge_range(24 * t + 5 * l + 5 * k, top - 1, 4))
        out = out.merge(_sphere(24 * t + 5 * l + 5 * k - 1, 2))
    else:
        out = out.merge(_wedge_range(24 * t + 5 * l + 5 * k - 1, top - 1, 4))
    return out


def _predict_A_eps2(n: int, k: int) -> WedgeDescriptor:
    # n = 20t + 4l + 2
    t, rem = divmod(n, 20)
    l = rem // 4
    kap = _kappa(k)
    top = 25 * t + 5 * l + 5 * k + 2
    out = _sphere(top, 1 + kap)
    if l in (0, 1):
        out = out.merge(_wedge_range(24 * t + 5 * l + 5 * k + 2, top - 1, 4))
    elif l in (2, 3):
        out = out.merge(_wedge_range(24 * t + 5 * l + 5 * k + 2, top - 1, 4))
        out = out.merge(_sphere(24 * t + 5 * l + 5 * k + 1, 2))
    else:  # l == 4
        out = out.merge(_wedge_range(24 * t + 5 * l + 5 * k + 1, top - 1, 4))
    return out


def predict_grid5(n: int) -> WedgeDescriptor:
    """Homotopy type of I of the n-by-5 grid."""
    special = {1: _sphere(1), 4: _sphere(4), 5: _sphere(5), 9: _sphere(10)}
    if n in special:
        return special[n]
    t, rem = divmod(n, 20)
    l, eps = divmod(rem, 4)
    nu = eps // 2
    nprime = 25 * t + 5 * l + eps - 1 + nu
    out = _sphere(nprime, 3 - 2 * nu)
    if rem in (0, 4, 5, 9, 10, 14, 15, 19):
        out = out.merge(_wedge_range(nprime - t - nu + 1, nprime - 1, 4))
        out = out.merge(_sphere(nprime - t - nu, 2))
    elif rem in (1, 18):
        out = out.merge(_wedge_range(nprime - t - 2 * nu + 1, nprime - 1, 4))
    else:
        out = out.merge(_wedge_range(nprime - t, nprime - 1, 4))
    return out


def predict_grid(n: int, k: int) -> WedgeDescriptor:
    if k > 5 and n <= 5:
        n, k = k, n
    if k == 1:
        return predict_path(n)
    if k == 2:
        return predict_grid2(n)
    if k == 3:
        return predict_grid3(n)
    if k == 4:
        return predict_grid4(n)
    if k == 5:
        return predict_grid5(n)
    raise UnsupportedFamilyError(
        "no formula in scope for a %dx%d grid (one side must be <= 5)" % (n, k))


def predict(spec: FamilySpec) -> WedgeDescriptor:
    """Closed-form homotopy type of I(build(spec)) as a descriptor."""
    kind = spec.kind
    if kind == "path":
        return predict_path(spec.n)
    if kind == "cycle":
        return predict_cycle(spec.n)
    if kind == "grid":
        return predict_grid(spec.n, spec.k)
    if kind == "x3":
        return predict_x3(spec.n)
    if kind == "y3":
        return predict_y3(spec.n)
    if kind == "x4":
        return predict_x4(spec.n)
    if kind == "y4":
        return predict_y4(spec.n)
    if kind == "x5":
        return predict_x5(spec.n)
    if kind == "y5":
        return predict_y5(spec.n)
    if kind == "a":
        return predict_A(spec.n, spec.k)
    if kind == "a-v":
        return predict_A_minus_v(spec.n, spec.k)
    if kind == "b":
        return predict_B(spec.k)
    if kind == "bp":
        return predict_B_prime(spec.k)
    raise UnsupportedFamilyError("no formula for kind %r" % kind)
