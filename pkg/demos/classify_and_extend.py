"""Walk-through: from a finite product table to central extensions.

Starting from the bundled two-generator product (W.L = L, W.W = W) this
script classifies every compatible classical bracket, builds the quadratic
lambda-bracket for the parameter-free member, solves its central-extension
cocycle system along two independent routes, and prints the extended
bracket.

Run:  python3 demos/classify_and_extend.py
"""

from confalg import (build_quadratic_bracket, check_conformal_leibniz,
                     check_conformal_skew, classify_brackets, extend_bracket,
                     solve_central_ext_assoc_novikov, solve_cocycles_direct,
                     star_from_mode, StarMode, zero_map)
from confalg.dsl import parse
from importlib import resources


def load(name):
    text = (resources.files("confalg") / "corpus" / name).read_text()
    return parse(text)


def main():
    af = load("r00.alg")
    circ = af.circ()
    space = af.space

    print("== the product ==")
    for i in space.names:
        for j in space.names:
            vec = circ.entry(i, j)
            if not space.vec_is_zero(vec):
                print("  %s . %s = %s" % (i, j, space.vec_str(vec)))

    print("\n== classical brackets compatible with it ==")
    cls = classify_brackets(circ)
    print("  a %d-parameter family:" % cls.dimension)
    for line in cls.family.entries_str():
        print("    %s" % line)
    print("  residual quadratic constraints: %s"
          % (cls.constraints or "none"))

    print("\n== the parameter-free member ==")
    star = star_from_mode(circ, StarMode.DOUBLE)
    built = build_quadratic_bracket(circ, star, zero_map(space, "bracket"))
    for i in space.names:
        for j in space.names:
            vp = built.entry(i, j)
            if not vp.is_zero():
                print("  [%s_l %s] = %s" % (i, j, vp))
    print("  Leibniz identity: %s"
          % ("passes" if check_conformal_leibniz(built).passed else "fails"))
    print("  skew-symmetry:    %s"
          % ("passes" if check_conformal_skew(built).passed else "fails"))

    print("\n== central extensions ==")
    structured = solve_central_ext_assoc_novikov(circ)
    direct = solve_cocycles_direct(built)
    print("  structured route: %d-dimensional cocycle space"
          % structured.dimension)
    print("  direct route:     %d-dimensional cocycle space"
          % direct.dimension)
    degrees = (0, 1, 2, 3)
    same = (structured.embed(degrees).reduced_basis()
            == direct.embed(degrees).reduced_basis())
    print("  identical reduced bases: %s" % same)
    for anz in structured.ansatzes():
        print("    %s" % anz)

    print("\n== one extended bracket ==")
    both = sum(structured.ansatzes()[1:], structured.ansatz(0))
    ext = extend_bracket(built, both)
    for i in space.names:
        for j in space.names:
            vp = ext.entry(i, j)
            if not vp.is_zero():
                print("  [%s_l %s] = %s" % (i, j, vp))
    print("  still Leibniz: %s" % check_conformal_leibniz(ext).passed)


if __name__ == "__main__":
    main()
