#!/usr/bin/env python3
"""Arbitrary-precision reference values for the fixture datasets in tests/fixtures.hpp.

Independent of the C++ implementation: evaluates the Dirichlet marginal
likelihoods as explicit Gamma-function products with mpmath at 50 digits.
The printed values are frozen into tests/test_scores.cpp and
tests/acceptance.cpp.
"""
import mpmath as mp

mp.mp.dps = 50

# Contingency tables {config: [n_k0, n_k1]} for X given its parents.
D1_ZW = {0: [2, 1], 1: [1, 2], 2: [1, 2], 3: [2, 1]}
D1_ZWY = {0: [2, 1], 1: [1, 2], 2: [1, 2], 7: [2, 1]}
D2_ZW = {0: [3, 0], 1: [0, 3], 2: [0, 3], 3: [3, 0]}
D2_ZWY = {0: [3, 0], 1: [0, 3], 2: [0, 3], 7: [3, 0]}


def bd_family(table, cell_prior):
    """prod_j Gamma(a_j)/Gamma(a_j+n_j) prod_k Gamma(a_jk+n_jk)/Gamma(a_jk)."""
    out = mp.mpf(1)
    for counts in table.values():
        a = [mp.mpf(cell_prior)] * len(counts)
        a_j = sum(a)
        n_j = sum(counts)
        out *= mp.gamma(a_j) / mp.gamma(a_j + n_j)
        for a_k, n_k in zip(a, counts):
            out *= mp.gamma(a_k + n_k) / mp.gamma(a_k)
    return out


def bdeu(table, r, q, alpha):
    return bd_family(table, mp.mpf(alpha) / (r * q))


def bds(table, r, alpha):
    return bd_family(table, mp.mpf(alpha) / (r * len(table)))


def entropy(table, cell_prior):
    h = mp.mpf(0)
    for counts in table.values():
        tot = sum(counts) + cell_prior * len(counts)
        for n_k in counts:
            p = (n_k + cell_prior) / tot
            if p > 0:
                h -= p * mp.log(p)
    return h


def main():
    print("noisy xor (D1)")
    print("  BDeu X|ZW   ", mp.nstr(bdeu(D1_ZW, 2, 4, 1), 12))
    print("  BDeu X|ZWY  ", mp.nstr(bdeu(D1_ZWY, 2, 8, 1), 12))
    print("  BDs  X|ZW   ", mp.nstr(bds(D1_ZW, 2, 1), 12))
    print("  BDs  X|ZWY  ", mp.nstr(bds(D1_ZWY, 2, 1), 12))
    print("  H emp       ", mp.nstr(entropy(D1_ZW, 0), 12))
    print("  H bdeu ZW   ", mp.nstr(entropy(D1_ZW, mp.mpf(1) / 8), 12))
    print("  H bdeu ZWY  ", mp.nstr(entropy(D1_ZWY, mp.mpf(1) / 16), 12))
    for a in ["1e-6", "1e8"]:
        ratio = bds(D1_ZWY, 2, mp.mpf(a)) / bdeu(D1_ZWY, 2, 8, mp.mpf(a))
        print(f"  BDs/BDeu ZWY alpha={a}", mp.nstr(ratio, 12))
    print("exact xor (D2)")
    print("  BDeu X|ZW   ", mp.nstr(bdeu(D2_ZW, 2, 4, 1), 12))
    print("  BDeu X|ZWY  ", mp.nstr(bdeu(D2_ZWY, 2, 8, 1), 12))
    print("  BDs  X|ZWY  ", mp.nstr(bds(D2_ZWY, 2, 1), 12))
    print("  H bdeu ZW   ", mp.nstr(entropy(D2_ZW, mp.mpf(1) / 8), 12))
    print("  H bdeu ZWY  ", mp.nstr(entropy(D2_ZWY, mp.mpf(1) / 16), 12))
    print("  BDeu ZW a=1e-8", mp.nstr(bdeu(D2_ZW, 2, 4, mp.mpf("1e-8")), 12))
    for a in ["1e-6", "1e8"]:
        ratio = bds(D2_ZWY, 2, mp.mpf(a)) / bdeu(D2_ZWY, 2, 8, mp.mpf(a))
        print(f"  BDs/BDeu ZWY alpha={a}", mp.nstr(ratio, 12))
    print("constant Y (X,Y binary; rows (0,1)x2, (1,1)x5)")
    x_marg = {0: [2, 5]}
    y_marg = {0: [0, 7]}
    x_given_y = {1: [2, 5]}
    y_given_x = {0: [0, 2], 1: [0, 5]}
    g1 = bds(y_marg, 2, 1) * bds(x_given_y, 2, 1)
    g2 = bds(x_marg, 2, 1) * bds(y_given_x, 2, 1)
    g0 = bds(x_marg, 2, 1) * bds(y_marg, 2, 1)
    print("  BDs Y->X    ", mp.nstr(g1, 12), "log", mp.nstr(mp.log(g1), 15))
    print("  BDs X->Y    ", mp.nstr(g2, 12), "log", mp.nstr(mp.log(g2), 15))
    print("  BDs empty   ", mp.nstr(g0, 12), "log", mp.nstr(mp.log(g0), 15))


if __name__ == "__main__":
    main()
