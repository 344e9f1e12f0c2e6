"""A wavefunction two ways: lattice transfer sum vs. closed formula.

Builds the M=4, N=2 overlap for the configuration x=(2,4) by applying two
row operators to the vacuum, then recomputes it from the symmetric-function
closed form, and checks the two agree symbolically.
"""

from vertexpoly import (ParamSet, ParticleConfig, canonical_vartable,
                        family_poly, wavefunction)


def main():
    vt = canonical_vartable(n_u=2)
    p = ParamSet.symbolic_over(vt)
    us = p.spectral(2)
    config = ParticleConfig(4, (2, 4))

    lattice = wavefunction("psi", config, us, p)
    closed = family_poly("G", config, us, p)

    print("configuration:", config.x, "on", config.m, "sites")
    print()
    print("lattice sum:")
    print(" ", lattice)
    print()
    print("closed formula:")
    print(" ", closed)
    print()
    print("equal:", lattice == closed)


if __name__ == "__main__":
    main()
