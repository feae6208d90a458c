"""This file is a demo user script for rank varieties and pi-points over the Witt algebra kE, p = 3, n = 1, m = 2"""
import os

import superpoint
from superpoint import config

# allow larger enumerations than the default
config.POINT_BUDGET = 10**6

path_dir = os.path.join(os.path.dirname(__file__), 'output')
if not os.path.isdir(path_dir):
    os.makedirs(path_dir)

alg = superpoint.alg_create(3, 'witt', 1, 2)
field = superpoint.FiniteField(3)

# kE / (sigma): s acts as a Jordan block of size 3, sigma by zero
sigma = superpoint.AlgebraElement.generator(alg, field, 'sigma')
M = superpoint.quotient_module(alg, field, [sigma])
print(superpoint.validate(M))

# rank variety over F_3 and F_9: the axis a_2 = 0
for e in (1, 2):
    variety = superpoint.rank_variety(M, e)
    print(variety, variety.points)

# support set and projectivity
print(superpoint.support_set(M, 1).points)
print(superpoint.is_projective(M))

# a standard pi-point and its restriction
a = superpoint.PiPointRep(alg, field, [0, 1])
r = superpoint.standard_restriction(M, a)
print(superpoint.max_image_test(r), superpoint.prime_ideal_generators(a))

# Betti numbers of the trivial module
k = superpoint.trivial_module(alg, field)
print(superpoint.minimal_resolution(k, 4).ranks)

# export the rank variety over F_9
variety = superpoint.rank_variety(M, 2)
superpoint.save_to_csv(superpoint.variety_to_df(variety), os.path.join(path_dir, 'variety.csv'))
