"""
This file handles the exceptions raised by the engine. For each error a class
is associated so that methods can be added according to the need. Every
domain error derives from SuperpointError (command line exit code 1), errors
in user supplied files or flags derive from UsageError (exit code 2).

This file also contains the handleError function which can be used as a
decorator to report the raised exceptions.
"""
import functools
import sys


class SuperpointError(Exception):
    def __init__(self, arg='Computation failed.'):
        super(SuperpointError, self).__init__(arg)
        self.message = arg


class UsageError(Exception):
    def __init__(self, arg='Invalid usage.'):
        super(UsageError, self).__init__(arg)
        self.message = arg


class CompositeP(SuperpointError):
    def __init__(self, arg='The characteristic must be a prime number p >= 3.'):
        super(CompositeP, self).__init__(arg)


class ReducibleModulus(SuperpointError):
    def __init__(self, arg='The modulus is not a monic irreducible polynomial of the requested degree.'):
        super(ReducibleModulus, self).__init__(arg)


class DimensionMismatch(SuperpointError):
    def __init__(self, arg='Matrix and vector dimensions do not agree.'):
        super(DimensionMismatch, self).__init__(arg)


class BadParameters(SuperpointError):
    def __init__(self, arg='The algebra parameters are out of range.'):
        super(BadParameters, self).__init__(arg)


class AlgebraMismatch(SuperpointError):
    def __init__(self, arg='The operands live over different algebras.'):
        super(AlgebraMismatch, self).__init__(arg)


class CharacteristicMismatch(SuperpointError):
    def __init__(self, arg='The field characteristic differs from the algebra characteristic.'):
        super(CharacteristicMismatch, self).__init__(arg)


class FieldMismatch(SuperpointError):
    def __init__(self, arg='The operands live over different fields, base change first.'):
        super(FieldMismatch, self).__init__(arg)


class ZeroPoint(SuperpointError):
    def __init__(self, arg='The point must be nonzero.'):
        super(ZeroPoint, self).__init__(arg)


class IncompatiblePair(SuperpointError):
    def __init__(self, arg='The pair (f, g) does not define an algebra map.'):
        super(IncompatiblePair, self).__init__(arg)


class NotAPiPoint(SuperpointError):
    def __init__(self, arg='The algebra map factors through the augmentation, it is not a pi-point.'):
        super(NotAPiPoint, self).__init__(arg)


class RelationViolation(SuperpointError):
    def __init__(self, arg='The rank matrix does not square to zero.'):
        super(RelationViolation, self).__init__(arg)


class ZeroClass(SuperpointError):
    def __init__(self, arg='The cohomology class must be nonzero.'):
        super(ZeroClass, self).__init__(arg)


class OddInternalDegree(SuperpointError):
    def __init__(self, arg='The cohomology class must be supported on even generators.'):
        super(OddInternalDegree, self).__init__(arg)


class BudgetExceeded(SuperpointError):
    def __init__(self, count, budget):
        super(BudgetExceeded, self).__init__(
            'Enumeration of %d points exceeds the budget of %d points.' % (count, budget))


class InvalidModuleFile(UsageError):
    def __init__(self, arg='The module file could not be parsed.'):
        super(InvalidModuleFile, self).__init__(arg)


class InvalidSpecFile(UsageError):
    def __init__(self, arg='The algebra map specification could not be parsed.'):
        super(InvalidSpecFile, self).__init__(arg)


def handleError(function):
    @functools.wraps(function)
    def runFunction(*args, **kwargs):
        try:
            return function(*args, **kwargs)
        except (SuperpointError, UsageError) as e:
            sys.stderr.write('%s: %s\n' % (type(e).__name__, e.message))
            raise
        except Exception:
            sys.stderr.write('Error Not Known\n')
            raise

    return runFunction
