from . import affinization, crystal_graph, ls_crystal
