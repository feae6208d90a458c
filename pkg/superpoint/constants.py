WITT = 'witt'
EXTERIOR = 'exterior'
ELEM_ABELIAN = 'elem_abelian'
FAMILIES = (WITT, EXTERIOR, ELEM_ABELIAN)

SIGMA = 'sigma'
EVEN_PREFIX = 's'

EVEN = 0
ODD = 1

COMMUTATION_STATE = 'does not commute'
NILPOTENCY_STATE = 'nilpotency relation fails'
SIGMA_RELATION_STATE = 'sigma relation fails'
EVEN_PARITY_STATE = 'mixes parities'
ODD_PARITY_STATE = 'preserves a parity'

VALIDATION_ACTION_OK = 'All_Ok'
VALIDATION_ACTION_STOP = 'Stop_Tool'
VALIDATION_ACTION = 'action'

PROJECTIVE = 'Projective'
NOT_PROJECTIVE = 'NotProjective'
NO_WITNESS = 'NoWitnessUpTo'

EXTERIOR_MATRIX_THM = 'thm'
EXTERIOR_MATRIX_PAPER = 'paper'

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

ZETA = 'zeta'
POINT_COL = 'point'
COORD_COL_PREFIX = 'a'
SUPPORT_COL_PREFIX = 'b'

COLUMN_GENERATOR = 'generator'
COLUMN_INVARIANT = 'invariant'
COLUMN_STATE = 'state'
REPORT_COLUMNS = [COLUMN_GENERATOR, COLUMN_INVARIANT, COLUMN_STATE]
