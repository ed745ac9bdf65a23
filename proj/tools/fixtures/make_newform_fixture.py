#!/usr/bin/env python3
"""Build the bundled newform fixture (data/newforms.json) with PARI/GP.

Computes every newform orbit of level M and weight k for the (M, k) ranges
used by the finder contexts, labels them with LMFDB conventions (character
orbits sorted by order then trace vector, newform orbits sorted by dimension
then trace form) and writes a_l for primes l <= 11 with l not dividing M,
expressed in a power basis of an absolute defining polynomial.

Requires the `cypari` package.  Usage:
    python3 make_newform_fixture.py ../../data/newforms.json
"""
import json
import math
import os
import sys

from cypari import pari

PRIMES = [2, 3, 5, 7, 11]
TRACE_BOUND = 100
SCHEMA_VERSION = "newforms/1"
CACHE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), ".cache")
# polredbest on larger absolute fields is slow and only shortens coefficients.
POLRED_MAX_DEGREE = 24

# Highest weight needed per level: max(g) + 4 over the contexts whose level
# is a multiple of M.
CONTEXT_MAX_G = {1: 10, 2: 6, 3: 7, 4: 2, 5: 7, 6: 2, 7: 7, 8: 2, 9: 2,
                 10: 2, 11: 5, 12: 2, 13: 5, 14: 2, 15: 2, 16: 2, 17: 2,
                 18: 2}


def max_weight(level):
    return max(g + 4 for n, g in CONTEXT_MAX_G.items() if n % level == 0)


def unit_generators(n):
    """Generators of (Z/n)^x: one per odd prime power (smallest primitive
    root lifted by CRT), and -1, 5 for 2^e with e >= 3 (-1 alone for e=2)."""
    gens = []
    m = n
    p = 2
    factors = []
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1
    if m > 1:
        factors.append((m, 1))
    for p, e in factors:
        q = p ** e
        rest = n // q

        def lift(r):
            # x = r mod q, x = 1 mod rest
            for x in range(1, n + 1):
                if x % q == r % q and x % rest == 1 % rest:
                    return x % n
            raise AssertionError

        if p == 2:
            if e == 2:
                gens.append(lift(q - 1))
            elif e >= 3:
                gens.append(lift(q - 1))
                gens.append(lift(5))
        else:
            phi = q // p * (p - 1)
            for g in range(2, q):
                if math.gcd(g, p) != 1:
                    continue
                if all(pow(g, phi // f, q) != 1 for f in prime_factors(phi)):
                    gens.append(lift(g))
                    break
    return gens


def prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def char_orbits(level):
    """Galois orbits of characters mod level, LMFDB order, as lists of
    (conrey index, order)."""
    G = pari(f"znstar({level},1)")
    seen = set()
    orbits = []
    for c in range(1, level + 1):
        if math.gcd(c, level) != 1 or c in seen:
            continue
        chi = pari.znconreychar(G, c)
        o = int(pari.charorder(G, chi))
        members = []
        for a in range(1, max(o, 1) + 1):
            if math.gcd(a, o) != 1:
                continue
            ca = pow(c, a, level) if level > 1 else 1
            members.append(ca % level if level > 1 else 1)
        members = sorted(set(members))
        for m in members:
            seen.add(m)
        traces = []
        for n in range(1, level + 1):
            if math.gcd(n, level) != 1:
                traces.append(0)
                continue
            x = pari.chareval(G, chi, n)
            tot = 0.0
            for a in range(1, o + 1):
                if math.gcd(a, o) == 1:
                    tot += math.cos(2 * math.pi * float(x) * a)
            traces.append(int(round(tot)))
        parity = 1
        if level > 2:
            xm = pari.chareval(G, chi, level - 1)
            parity = 1 if int(xm * 2) % 2 == 0 else -1
        orbits.append({"rep": min(members), "order": o, "traces": traces,
                       "parity": parity})
    orbits.sort(key=lambda d: (d["order"], d["traces"]))
    for i, d in enumerate(orbits):
        d["letter"] = letter(i)
    return orbits


def letter(i):
    s = ""
    i += 1
    while i > 0:
        i, r = divmod(i - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def int_or_str(v):
    v = int(v)
    if abs(v) < 2 ** 53:
        return v
    return str(v)


def poly_coeffs(pol, var, deg):
    pol = pari.lift(pol)
    return [pari.polcoef(pol, i, var) for i in range(deg)]


def build_space(level, weight, orbit):
    chi_index = orbit["rep"]
    mf = pari(f"mfinit([{level},{weight},Mod({chi_index},{level})],0)")
    if int(pari.mfdim(mf)) == 0:
        return []
    params = pari.mfparams(mf)
    cyc = params[4]
    basis = pari.mfeigenbasis(mf)
    fields = pari.mffields(mf)
    G = pari(f"znstar({level},1)")
    chi = pari.znconreychar(G, chi_index)
    o = int(pari.charorder(G, chi))
    cyc_deg = int(pari.poldegree(cyc))
    gens = unit_generators(level)
    bound = max(TRACE_BOUND, max(PRIMES) ** 2)
    forms = []
    for f, prel in zip(basis, fields):
        y = pari("y")
        if cyc_deg > 1:
            req = pari.rnfequation(cyc, prel, 1)
            pabs, t_img, kk = req[0], req[1], req[2]
            if int(pari.poldegree(pabs)) <= POLRED_MAX_DEGREE:
                red = pari.polredbest(pabs, 1)
                q, b = red[0], red[1]
            else:
                q, b = pabs, pari("y")
            t_expr = pari.subst(pari.lift(t_img), y, b)
            y_expr = b - kk * t_expr
        else:
            p0 = pari.liftall(prel)
            if int(pari.poldegree(p0)) <= POLRED_MAX_DEGREE:
                red = pari.polredbest(p0, 1)
                q, b = red[0], red[1]
            else:
                q, b = p0, pari("y")
            t_expr = None
            y_expr = b
        deg = int(pari.poldegree(q))

        w = pari("w")
        q = pari.subst(q, y, w)
        y_w = pari.subst(pari.lift(y_expr), y, w)
        t_w = pari.subst(pari.lift(t_expr), y, w) if t_expr is not None else None

        def to_abs(a):
            a = pari.liftall(a)
            if t_w is not None:
                a = pari.substvec(a, [y, pari("t")], [y_w, t_w])
            else:
                a = pari.subst(a, y, y_w)
            return pari.Mod(a, q)

        coeffs = pari.mfcoefs(f, bound)
        an = [to_abs(coeffs[n]) for n in range(bound + 1)]
        traces = [int(pari.trace(an[n])) for n in range(1, TRACE_BOUND + 1)]

        # Character values on generators, taken from chareval and checked
        # against a_{l^2} = a_l^2 - chi(l) l^(k-1) at small primes.
        def chi_direct(n, sign):
            # value of chi(n) as t^e where t is the root of the cyclotomic
            # polynomial used by mfinit (polcyclo(o) or polcyclo(o/2) with
            # t -> -t when o = 2 mod 4).
            x = pari.chareval(G, chi, n)
            e = (int(x * o) * sign) % o
            if o <= 2:
                return pari.Mod(-1 if (o == 2 and e == 1) else 1, q)
            tt = pari.Mod(t_w, q)
            if cyc == pari.polcyclo(o, pari("t")):
                return tt ** e
            if o % 4 == 2 and cyc == pari.polcyclo(o // 2, pari("t")):
                return (-tt) ** e
            raise RuntimeError(f"unexpected cyclotomic polynomial {cyc} for order {o}")

        chosen = None
        for sign in (1, -1):
            ok = True
            for l in PRIMES:
                if level % l == 0:
                    continue
                lhs = an[l] ** 2 - an[l * l]
                rhs = chi_direct(l, sign) * l ** (weight - 1)
                if lhs != rhs:
                    ok = False
                    break
            if ok:
                chosen = sign
                break
        if chosen is None:
            raise RuntimeError(f"character check failed for {level}.{weight}.{orbit['letter']}")
        gen_vals = [chi_direct(g, chosen) for g in gens]
        gen_orders = []
        for g in gens:
            x = pari.chareval(G, chi, g)
            gen_orders.append(int(pari.denominator(x)))

        forms.append({"dim_abs": deg, "traces": traces, "q": q,
                      "an": an, "gen_vals": gen_vals, "gen_orders": gen_orders,
                      "gens": gens})
    forms.sort(key=lambda d: (d["dim_abs"], d["traces"]))
    out = []
    for i, d in enumerate(forms):
        label = f"{level}.{weight}.{orbit['letter']}.{letter(i)}"
        deg = d["dim_abs"]
        q = d["q"]
        vals = {}
        den = 1
        elems = {str(l): d["an"][l] for l in PRIMES if level % l != 0}
        for key, el in elems.items():
            cs = poly_coeffs(el, pari("w"), deg)
            for c in cs:
                den = math.lcm(den, int(pari.denominator(c)))
        for el in d["gen_vals"]:
            for c in poly_coeffs(el, pari("w"), deg):
                den = math.lcm(den, int(pari.denominator(c)))

        def enc(el):
            return [int_or_str(c * den) for c in poly_coeffs(el, pari("w"), deg)]

        field_poly = [int_or_str(pari.polcoef(q, i, pari.variable(q))) for i in range(deg + 1)]
        out.append({
            "label": label,
            "level": level,
            "weight": weight,
            "char": {
                "modulus": level,
                "orbit": orbit["letter"],
                "conrey": orbit["rep"],
                "generators": d["gens"],
                "gen_values_order": d["gen_orders"],
                "gen_values": [enc(v) for v in d["gen_vals"]],
            },
            "field_poly": field_poly,
            "denominator": int_or_str(den),
            "ap": {k: enc(v) for k, v in elems.items()},
        })
    return out


def main():
    if len(sys.argv) != 2:
        sys.exit("usage: make_newform_fixture.py OUTPUT.json")
    pari.allocatemem(2 * 10**9)
    records = []
    for level in sorted(CONTEXT_MAX_G):
        orbits = char_orbits(level)
        for weight in range(2, max_weight(level) + 1):
            for orb in orbits:
                if orb["parity"] != (-1) ** weight:
                    continue
                path = os.path.join(CACHE_DIR, f"{level}.{weight}.{orb['letter']}.json")
                if os.path.exists(path):
                    with open(path) as fh:
                        recs = json.load(fh)
                else:
                    recs = build_space(level, weight, orb)
                    os.makedirs(CACHE_DIR, exist_ok=True)
                    with open(path, "w") as fh:
                        json.dump(recs, fh)
                for r in recs:
                    r["denominator"] = int_or_str(r["denominator"])
                records.extend(recs)
                for r in recs:
                    print(r["label"], len(r["field_poly"]) - 1, file=sys.stderr)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "source_commit": "pari-" + ".".join(str(x) for x in pari.version()),
        "prime_bound": max(PRIMES),
        "records": records,
    }
    with open(sys.argv[1], "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    main()
