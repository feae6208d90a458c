"""Key names of module files"""
ALGEBRA = 'algebra'
FIELD = 'field'
DIM = 'dim'
PARITY = 'parity'
ACTIONS = 'actions'
P = 'p'
FAMILY = 'family'
N = 'n'
M = 'm'
DEGREE = 'degree'
MODULUS = 'modulus'
