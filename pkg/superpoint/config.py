"""
The variables below are the defaults used by the engine and the command line
front end. They can be changed by the user, e.g. to allow larger point
enumerations on a bigger machine.
"""
# Largest number of affine points a rank variety enumeration may visit
POINT_BUDGET = 10**7
# Largest extension degree searched for a projectivity witness
DEFAULT_MAX_EXT = 4
# Extension degree of the enumeration field F_{p^e}
DEFAULT_EXT_DEGREE = 1
# Number of differentials built by the resolve command
DEFAULT_RESOLUTION_LENGTH = 4
# Rank matrix used for the exterior family ('thm' or 'paper')
EXTERIOR_MATRIX = 'thm'
# Most ideal generators drawn for one cyclic piece of a random module
RANDOM_MAX_GENERATORS = 3
# Points handed to a worker at a time when enumerating in parallel
PARALLEL_CHUNK = 256
