"""Walk through the large worked pair at delta = 1: strips, maximal subs, minimal weight."""
from wbrauer.blocks import i_maximal_subs, is_balanced, maximal_balanced_sub, minimal_balanced_weight
from wbrauer.combinatorics import Bipartition

LAM = Bipartition.of((4, 4, 4, 1, 1, 1), (5, 5, 2, 2, 2))
MU = Bipartition.of((2, 1), (4,))
DELTA = 1


def main():
    print(f"lambda = {LAM}, mu = {MU}, delta = {DELTA}")
    print(f"balanced: {is_balanced(LAM, MU, DELTA)}")
    for box, (strip, nu) in sorted(i_maximal_subs(LAM, MU, DELTA).items()):
        cells = ", ".join(f"{side}({b.row},{b.col})" for side, b in sorted(strip))
        print(f"box ({box.row},{box.col}) content {box.content}: strip {{{cells}}} -> {nu}")
    print("maximal balanced subs:", sorted(str(x) for x in maximal_balanced_sub(LAM, MU, DELTA)))
    print(f"minimal balanced weight: {minimal_balanced_weight(LAM, DELTA)}")
    stated = Bipartition.of((4, 4, 4), (3, 3, 2, 2, 2))
    print(f"{stated} balanced with lambda: {is_balanced(LAM, stated, DELTA)}")


if __name__ == "__main__":
    main()
