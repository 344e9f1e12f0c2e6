"""From vertex-model wavefunctions to Grothendieck polynomials.

At the specialized weights a = 1, b = t*beta, c = d = 1, sending the
quantum parameter t to 0 turns the first polynomial family into a
beta-Grothendieck polynomial in the variables z_j = -1/beta - 1/u_j, with
the partition read off the particle configuration.  This demo performs the
substitution symbolically and prints both sides.
"""

from vertexpoly import (ParamSet, ParticleConfig, canonical_vartable,
                        config_to_young, degeneration_rhs, family_poly)
from vertexpoly.ring import RatFunc


def main():
    m, x = 4, (2, 3)
    vt = canonical_vartable(n_u=2, free_params=("t",), beta=True)
    one = RatFunc(vt.const(1))
    t = RatFunc(vt.var("t"))
    beta = RatFunc(vt.var("beta"))
    us = [RatFunc(vt.var("u1")), RatFunc(vt.var("u2"))]

    p = ParamSet(t, one, t * beta, one, one)
    config = ParticleConfig(m, x)
    lam = config_to_young(config)

    limit = family_poly("G", config, us, p).substitute({"t": 0})
    target = degeneration_rhs(config, us, beta, m)

    print("configuration", x, "on", m, "sites  ->  partition", lam)
    print()
    print("family polynomial at t = 0:")
    print(" ", limit)
    print()
    print("scaled Grothendieck bialternant:")
    print(" ", target)
    print()
    print("equal:", limit == target)


if __name__ == "__main__":
    main()
