from decimal import Decimal, InvalidOperation
from fractions import Fraction

from typing import List, Sequence, Tuple, Union

__version__ = '0.1'
__all__ = ['parse_decimal', 'parse_integer', 'scale_decimals', 'format_scaled',
           'format_float']


def parse_decimal(token: str) -> Decimal:
    """
    Parse a decimal string into an exact decimal.Decimal.  Anything that is not
    a finite decimal number (NaN, infinities, garbage) raises a ValueError.
    """

    try:
        value = Decimal(token)
    except InvalidOperation:
        raise ValueError(f"'{token}' is not a decimal number")
    if not value.is_finite():
        raise ValueError(f"'{token}' is not a finite decimal number")
    return value


def parse_integer(token: str) -> int:
    """
    Parse an integer token.  Decimal points and exponents are rejected even if
    the value happens to be integral.
    """

    try:
        return int(token, 10)
    except ValueError:
        raise ValueError(f"'{token}' is not an integer")


def scale_decimals(tokens: Sequence[str]) -> Tuple[List[int], int]:
    """
    Given a collection of decimal strings, scale them all by a shared power of
    ten so that every value becomes an exact integer.  Returns the list of
    scaled integers and the scale factor.
    """

    values = [parse_decimal(token) for token in tokens]

    # Find the deepest fractional digit across all values
    digits = 0
    for value in values:
        exponent = value.normalize().as_tuple().exponent
        if exponent < 0:
            digits = max(digits, -exponent)
    scale = 10**digits

    scaled = [int(value.scaleb(digits)) for value in values]
    return scaled, scale


def format_scaled(value: Union[int, Fraction], scale: int) -> str:
    """
    Inverse of scale_decimals for a single value:  return value/scale as the
    shortest decimal string that represents it exactly.  The scale must be a
    power of ten.  Fractions are accepted as long as value/scale has a
    terminating decimal expansion; anything else raises a ValueError.
    """

    digits = len(str(scale)) - 1
    if scale != 10**digits:
        raise ValueError(f"Scale {scale} is not a power of ten")

    exact = Fraction(value) / scale

    ## A terminating decimal has a denominator of the form 2**a * 5**b and
    ## needs max(a, b) places
    rest, twos, fives = exact.denominator, 0, 0
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        raise ValueError(f"{value}/{scale} cannot be written exactly as a decimal")
    places = max(twos, fives)

    scaled = exact.numerator * (10**places // exact.denominator)
    text = str(abs(scaled)).rjust(places+1, '0')
    if places:
        text = text[:-places] + '.' + text[-places:]
    return ('-' if scaled < 0 else '') + text


def format_float(value: float, precision: int=9) -> str:
    """
    Format a coordinate with a fixed number of decimal places.  Values that
    round to zero are always written without a sign so output is stable.
    """

    text = f"{value:.{precision}f}"
    if float(text) == 0:
        text = f"{0.0:.{precision}f}"
    return text
