"""Double description method: generators of a cone given by inequalities.

Every cone conversion in the package goes through :func:`double_description`
(the halfspace side of ``cone(G)`` is obtained from the generators of its
dual ``{u : G u >= 0}``).  Arithmetic is on Python integers, so exact.
"""

from math import gcd


def _primitive(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _dot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def double_description(rows, n):
    """Generators of ``{x : <a, x> >= 0 for a in rows}`` in ``Z^n``.

    ``rows`` is a sequence of integer tuples.  Returns ``(lineality, rays)``,
    two lists of primitive integer tuples: a basis of the lineality space
    and one representative per extreme ray (modulo lineality).  The
    representatives are not canonical; callers normalise them.
    """
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays = []
    zsets = []  # bitmask of processed constraints vanishing on each ray
    k = 0
    for a in rows:
        if not any(a):
            continue
        bit = 1 << k
        pivot = -1
        for idx, l in enumerate(lin):
            if _dot(a, l) != 0:
                pivot = idx
                break
        if pivot >= 0:
            l = lin.pop(pivot)
            al = _dot(a, l)
            if al < 0:
                l = tuple(-x for x in l)
                al = -al
            lin = [
                _primitive([al * x - am * y for x, y in zip(m, l)])
                for m in lin
                for am in (_dot(a, m),)
            ]
            new_rays = []
            new_z = []
            for r, z in zip(rays, zsets):
                ar = _dot(a, r)
                new_rays.append(_primitive([al * x - ar * y for x, y in zip(r, l)]))
                new_z.append(z | bit)
            new_rays.append(l)
            new_z.append(bit - 1)
            rays, zsets = new_rays, new_z
            k += 1
            continue

        vals = [_dot(a, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        new_rays = []
        new_z = []
        for i, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[i])
                new_z.append(zsets[i])
            elif v == 0:
                new_rays.append(rays[i])
                new_z.append(zsets[i] | bit)
        for i in pos:
            for j in neg:
                common = zsets[i] & zsets[j]
                adjacent = True
                for t, zt in enumerate(zsets):
                    if t != i and t != j and common & zt == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                ai, aj = vals[i], vals[j]
                p, q = rays[i], rays[j]
                new_rays.append(_primitive([ai * y - aj * x for x, y in zip(p, q)]))
                new_z.append(common | bit)
        rays, zsets = new_rays, new_z
        k += 1
    return lin, rays
