"""Key names of algebra map specification files"""
ALGEBRA = 'algebra'
FIELD = 'field'
F = 'f'
G = 'g'
