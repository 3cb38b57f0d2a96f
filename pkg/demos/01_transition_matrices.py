"""
Transition matrices of the bordered and boundless walks
=======================================================

Cells are numbered row by row, so on a 3x3 grid the centre is state 5.
"""

import numpy as np

from gridwalk import Borders, ChainModel, GridSpec, build_chain, make_absorbing

np.set_printoptions(precision=3, suppress=True, linewidth=120)

# Bordered walk: corners move with probability 1/2, edges 1/3, interior 1/4.
bordered = GridSpec(3, 3)
print(build_chain(bordered).toarray())

# Without borders every move has probability 1/4; the walk wraps around.
boundless = GridSpec(3, 3, borders=Borders.BOUNDLESS)
print(build_chain(boundless).toarray())

# Making state 5 absorbing replaces its row with the unit row.
model = ChainModel.from_spec(bordered, start=5)
print(make_absorbing(model, 5).toarray())

# Three dimensions use the same builder; a 2x2x2 cube has degree 3 everywhere.
cube = build_chain(GridSpec(2, 2, 2))
print(cube.toarray())
