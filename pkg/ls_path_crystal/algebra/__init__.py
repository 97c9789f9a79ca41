from . import affine_data, chain_order, paths, weights
