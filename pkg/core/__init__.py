# core package
from . import graph, matching, gallai_edmonds, gap, eqsets, gadgets, storage
