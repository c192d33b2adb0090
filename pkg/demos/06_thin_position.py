"""
Morse presentations of links: width, the exchange move, induced
splittings.

Reading bottom to top, a birth inserts two adjacent strands and a death
joins two; the width sums the strand counts between consecutive events.
An independent maximum sitting just above a minimum slides below it and
drops the width by exactly four.
"""

from normalhst.thin_position import (MorsePresentation, exchange_move,
                                     induced_splitting, legal_exchanges,
                                     thin_position_search, width)


def show(pres, label):
    prof = width(pres)
    print(f"  {label}: events {pres.kinds()}, profile {prof.profile}, "
          f"width {prof.width}")


print("Widths of small presentations:")
show(MorsePresentation.of("B", "D"), "unknot")
show(MorsePresentation.of("B", "B", "D", "D"), "bridge position")
show(MorsePresentation.of("B", "D", "B", "D"), "stacked unknots")

print()
print("The induced splitting of (3-sphere, link) by level spheres:")
pres = MorsePresentation.of("B", "B", "D", "B", "D", "D")
splitting = induced_splitting(pres)
levels = [[[comp.closed_chi, comp.punctures] for comp in lvl.components]
          for lvl in splitting.levels]
print(f"  profile {width(pres).profile} -> levels {levels}")

print()
print("A width-reducing exchange:")
tangled = MorsePresentation.of(("B", 0), ("B", 0), ("B", 0), ("D", 2),
                               ("D", 0), ("D", 0))
print(f"  start: width {width(tangled).width}, "
      f"legal exchanges {legal_exchanges(tangled)}")
result = exchange_move(tangled, 3, 2)
print(f"  after swapping: width {width(result.presentation).width} "
      f"(drop {result.width_decrease})")

print()
print("Minimal width over all orderings of two births and two deaths:")
four = MorsePresentation.of("B", "B", "D", "D")
free = thin_position_search(four, mode="all")
tied = thin_position_search(four, mode="all", single_component=True)
print(f"  unconstrained: {free.minimum_width} "
      f"(witness {free.witness.kinds()})")
print(f"  single component: {tied.minimum_width} "
      f"(witness {tied.witness.kinds()})")
