#!/usr/bin/env python3
"""Derives the cycle-notation generators stored in crates/core/src/catalog.rs.

GL(3,2) acts on the 7 nonzero vectors of F_2^3; vector v (as a 3-bit integer,
bit i = coordinate i) is point v. PSL(2,11) acts on the projective line over
F_11 by Moebius maps; x in 0..10 is point x+1 and infinity is point 12.
The two A5 subgroups of PSL(2,11) are the first two pairwise non-conjugate
order-60 subgroups met while scanning pairs of elements in canonical order.
"""


def cycles(images):
    n, seen, out = len(images), [False] * len(images), []
    for s in range(n):
        if seen[s] or images[s] == s:
            seen[s] = True
            continue
        c, x = [], s
        while not seen[x]:
            seen[x] = True
            c.append(x + 1)
            x = images[x]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) or "()"


def compose(p, q):
    return tuple(p[x] for x in q)


def closure(gens, limit=None):
    n = len(gens[0])
    ident = tuple(range(n))
    seen, queue = {ident}, [ident]
    while queue:
        x = queue.pop()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if limit and len(seen) > limit:
                    return None
    return seen


def gl32():
    # matrices by column images of e1, e2, e3 (as bit masks)
    def perm(cols):
        def apply(v):
            w = 0
            for i in range(3):
                if v >> i & 1:
                    w ^= cols[i]
            return w
        return tuple(apply(v) - 1 for v in range(1, 8))

    a = perm([0b001, 0b011, 0b100])  # transvection e2 -> e1 + e2
    b = perm([0b010, 0b100, 0b011])  # companion matrix of x^3 + x + 1
    g = closure([a, b])
    assert len(g) == 168
    point = [x for x in g if x[0] == 0]
    line = {0, 1, 2}  # vectors 1, 2, 3: third coordinate zero
    line_stab = [x for x in g if {x[i] for i in line} == line]
    return a, b, g, point, line_stab


def small_generating_pair(sub):
    elems = sorted(sub)
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if len(closure([x, y], len(sub))) == len(sub):
                return x, y


def psl2_11():
    p = 11
    inf = p

    def moebius(a, b, c, d):
        out = []
        for x in range(p + 1):
            if x == inf:
                y = inf if c == 0 else a * pow(c, -1, p) % p
            else:
                den = (c * x + d) % p
                y = inf if den == 0 else (a * x + b) * pow(den, -1, p) % p
            out.append(y)
        return tuple(out)

    t = moebius(1, 1, 0, 1)
    s = moebius(0, -1 % p, 1, 0)
    g = closure([t, s])
    assert len(g) == 660
    elems = sorted(g)
    found = []
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            h = closure([x, y], 60)
            if h is None or len(h) != 60:
                continue
            hs = frozenset(h)
            if any(conjugate(hs, z, k) for k in found for z in elems):
                continue
            found.append(hs)
            print(f"# a5_{len(found)} via pair {cycles(x)} {cycles(y)}")
            break
        if len(found) == 2:
            break
    return t, s, found


def conjugate(h, z, k):
    zi = tuple(sorted(range(len(z)), key=lambda i: z[i]))
    return frozenset(compose(zi, compose(x, z)) for x in h) == k


if __name__ == "__main__":
    a, b, g, point, line = gl32()
    print("gl3_2 generators:", cycles(a), cycles(b))
    pa, pb = small_generating_pair(point)
    la, lb = small_generating_pair(line)
    print("point_stab:", cycles(pa), cycles(pb))
    print("line_stab:", cycles(la), cycles(lb))
    t, s, a5 = psl2_11()
    print("psl2_11 generators:", cycles(t), cycles(s))
    for i, h in enumerate(a5, 1):
        x, y = small_generating_pair(h)
        print(f"a5_{i}:", cycles(x), cycles(y))
