"""Walk-through: mode algebras and induced mode cocycles.

Expands the two-parameter lambda-bracket family into its algebra of modes,
prints a slice of the bracket table, verifies the mode-level Leibniz
identity on a grid, and shows how a central-extension cocycle descends to
a 2-cocycle of the mode algebra.

Run:  python3 demos/mode_algebra.py
"""

from confalg import (CoeffAlgebra, PhiCocycle, check_coeff_leibniz,
                     check_phi_cocycle, extend_bracket,
                     solve_central_ext_assoc_novikov)
from confalg.dsl import parse
from importlib import resources


def load(name):
    text = (resources.files("confalg") / "corpus" / name).read_text()
    return parse(text)


def main():
    af = load("rab.alg")
    at = af.substitute({"a": 1, "b": -2})
    bracket = at.conformal_bracket()

    print("== mode brackets of the family at a = 1, b = -2 ==")
    ca = CoeffAlgebra(bracket)
    for line in ca.table_lines((-1, 0, 1)):
        print("  %s" % line)

    rep = check_coeff_leibniz(bracket, range(-2, 3))
    print("\nmode Leibniz on the grid {-2..2}^3: %s (%d instances)"
          % ("passes" if rep.passed else "fails", rep.checked))

    print("\n== induced mode cocycles of the parameter-free member ==")
    af0 = load("r00.alg")
    circ = af0.circ()
    built = af0.conformal_bracket()
    sol = solve_central_ext_assoc_novikov(circ)
    gamma = sol.ansatz(0) + sol.ansatz(1)
    beta = sol.ansatz(2) + sol.ansatz(3)
    for name, anz in (("gamma", gamma), ("beta", beta)):
        phi = PhiCocycle(anz)
        ok = check_phi_cocycle(CoeffAlgebra(built), phi, range(-3, 4)).passed
        print("  %s direction: %s" % (name, phi))
        print("    mode 2-cocycle on {-3..3}^3: %s"
              % ("passes" if ok else "fails"))

    print("\n== central terms in the extended mode algebra ==")
    ext = extend_bracket(built, gamma + beta)
    cae = CoeffAlgebra(ext)
    for (m, n) in ((1, -1), (2, -2), (3, -1), (4, -2)):
        print("  [L[%d], W[%d]] = %s" % (m, n,
                                         cae.mode_bracket_basis("L", m,
                                                                "W", n)))


if __name__ == "__main__":
    main()
