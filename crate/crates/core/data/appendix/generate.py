#!/usr/bin/env python3
"""Expected appendix reports for G_a,1 inside G_a,2, written from the closed
forms alone (no structure constants are multiplied out here).

usage: generate.py P [P ...]   writes pP.json next to this script
"""
import json
import sys
from math import factorial
from pathlib import Path


def t(i):
    return "1" if i == 0 else ("t" if i == 1 else f"t^{i}")


def inv(a, p):
    return pow(a, p - 2, p)


def frac(num, den, p):
    return num * inv(den % p, p) % p


def entry(label, c, p):
    c %= p
    return [[label, str(c)]] if c else []


def report(p):
    n = p * p
    d = lambda i: f"δ{i}"
    pi = {d(k): (entry(d(k // p), 1, p) if k % p == 0 else []) for k in range(n)}
    gamma = {d(k): entry(d(p * k), 1, p) for k in range(p)}
    gamma_inv = {d(k): entry(d(p * k), (-1) ** k, p) for k in range(p)}
    eta = {d(k): (entry(d(k), 1, p) if k < p else []) for k in range(n)}
    eta_inv = {d(k): (entry(d(k), (-1) ** k, p) if k < p else []) for k in range(n)}
    lambdas = []
    for lam in range(p):
        b = {d(k): entry(t(k), frac(lam ** k, factorial(k), p), p) for k in range(p)}
        tau = {d(0): [["1", "1", "1"]]}
        tau[d(1)] = [
            [t(j), t(p - j), str(c)]
            for j in range(1, p)
            if (c := frac(lam ** p, factorial(j) * factorial(p - j), p))
        ]
        for k in range(2, p):
            tau[d(k)] = []
        r = [
            [f"{t(i)}#δ0", f"{t(i)}#δ0", str(c)]
            for i in range(p)
            if (c := frac(lam ** i, factorial(i), p))
        ]
        lambdas.append(
            {
                "lambda": str(lam),
                "b": b,
                "b_is_hopf": True,
                "sigma_trivial": True,
                "tau": tau,
                "r_matrix": r,
            }
        )
    return {
        "schema_version": 1,
        "kind": "appendix",
        "p": p,
        "pi": pi,
        "gamma": gamma,
        "gamma_inv": gamma_inv,
        "eta": eta,
        "eta_inv": eta_inv,
        "lambdas": lambdas,
    }


if __name__ == "__main__":
    here = Path(__file__).resolve().parent
    for arg in sys.argv[1:]:
        p = int(arg)
        out = here / f"p{p}.json"
        out.write_text(json.dumps(report(p), ensure_ascii=False, indent=1, sort_keys=True) + "\n")
