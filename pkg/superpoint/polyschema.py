"""Define the schema of a polynomial in the generators of kE"""
import pyparsing

from superpoint.custom_exception import BadParameters, InvalidSpecFile
from superpoint.superalgebra import AlgebraElement


class PolynomialSchema(object):
    """This class has functions which help in defining the schema of a
    polynomial such as "2*s1^3 + s2 - sigma". Only the generator names of
    the algebra are accepted as variables.

    Coefficients are integers, reduced mod p, or coefficient vectors
    "[c0,c1,...]" giving a full element of F_{p^e} in the generator w.

    Attributes:
        alg : AlgebraPresentation whose generators are the variables
        field : FiniteField of the coefficients
    """

    def __init__(self, alg, field):
        self.alg = alg
        self.field = field

    @staticmethod
    def convert_integers(tokens):
        """convert pyparse tokens to integer"""
        return int(tokens[0])

    def create_coefficient_schema(self):
        """a coefficient is an integer or a bracketed coefficient vector"""
        integer = pyparsing.Word(pyparsing.nums).setParseAction(self.convert_integers)
        vector = pyparsing.Group(pyparsing.Suppress('[') + pyparsing.delimitedList(integer) +
                                 pyparsing.Suppress(']'))
        return (integer | vector)('coefficient')

    def create_factor_schema(self):
        """a factor is a generator with an optional exponent, example s1^3"""
        names = sorted(self.alg.generator_names, key=len, reverse=True)
        generator = pyparsing.oneOf(names) if names else pyparsing.NoMatch()
        exponent = pyparsing.Word(pyparsing.nums).setParseAction(self.convert_integers)
        return pyparsing.Group(generator('generator') +
                               pyparsing.Optional(pyparsing.Suppress('^') + exponent, default=1)('exponent'))

    def create_term_schema(self):
        """a term is a coefficient, factors, or a coefficient times factors"""
        coefficient = self.create_coefficient_schema()
        factor = self.create_factor_schema()
        star = pyparsing.Suppress('*')
        factors = pyparsing.Group(factor + pyparsing.ZeroOrMore(star + factor))('factors')
        term = (coefficient + pyparsing.Optional(star + factors)) | factors
        return pyparsing.Group(term)

    def create_polynomial_schema(self):
        """define polynomial schema, signed terms joined by + and -"""
        sign = pyparsing.oneOf('+ -')
        term = self.create_term_schema()
        signed = pyparsing.Group(pyparsing.Optional(sign, default='+')('sign') + term('term'))
        return pyparsing.StringStart() + signed + pyparsing.ZeroOrMore(signed) + pyparsing.StringEnd()

    def coefficient_value(self, token):
        if isinstance(token, int):
            return token % self.field.p
        digits = list(token)
        if len(digits) != self.field.e:
            raise InvalidSpecFile('Coefficient %s needs %d entries for %r.' % (digits, self.field.e, self.field))
        try:
            return self.field.encode(digits)
        except BadParameters as e:
            raise InvalidSpecFile(e.message)

    def term_value(self, term):
        alg, field = self.alg, self.field
        value = AlgebraElement.monomial(alg, field, alg.unit)
        if 'coefficient' in term:
            value = value.scale(self.coefficient_value(term['coefficient']))
        for factor in term.get('factors', []):
            value = value * AlgebraElement.generator(alg, field, factor['generator']).power(factor['exponent'])
        return value

    def parse(self, text):
        """
        Args:
            text : polynomial string, example "s1^3 + 2*s2*sigma"
        Returns:
            AlgebraElement : the polynomial, reduced in kE
        Raises:
            InvalidSpecFile : text does not follow the schema
        """
        try:
            parsed = self.create_polynomial_schema().parseString(text.strip())
        except pyparsing.ParseException as e:
            raise InvalidSpecFile('Cannot parse %r as a polynomial in %s: %s'
                                  % (text, ', '.join(self.alg.generator_names), e))
        total = AlgebraElement(self.alg, self.field)
        for signed in parsed:
            value = self.term_value(signed['term'])
            total = total - value if signed['sign'] == '-' else total + value
        return total


def parse_polynomial(alg, field, text):
    return PolynomialSchema(alg, field).parse(text)
