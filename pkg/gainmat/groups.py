"""
Abelian gain groups

Group elements are plain Python values (int or Fraction); a group object
supplies the operations and the string codec used by instance files.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Optional, Tuple

from .errors import GroupError


class AbelianGroup(ABC):
    """Operations every gain group provides"""

    name = ''

    @property
    def zero(self) -> Any:
        return self.normalize(0)

    @abstractmethod
    def normalize(self, value: Any) -> Any:
        """Coerce a Python value into a canonical group element"""

    @abstractmethod
    def add(self, a: Any, b: Any) -> Any:
        pass

    @abstractmethod
    def neg(self, a: Any) -> Any:
        pass

    @abstractmethod
    def int_scale(self, k: int, a: Any) -> Any:
        """Return k·a"""

    def halve(self, a: Any) -> Optional[Any]:
        """Return some x with x + x = a, or None if no such element exists"""
        return None

    def cover(self) -> Optional[Tuple['AbelianGroup', Callable[[Any], Any]]]:
        """
        A group holding a half of every image element, with the injective
        homomorphism into it; None when this group already halves everything
        """
        return None

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def is_zero(self, a: Any) -> bool:
        return self.normalize(a) == self.zero

    def eq(self, a: Any, b: Any) -> bool:
        return self.is_zero(self.sub(a, b))

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, a: Any) -> str:
        return str(self.normalize(a))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Integers(AbelianGroup):
    """The integers"""

    name = 'Z'

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise GroupError(f'{value!r} is not an integer')
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise GroupError(f'{value} is not an integer')
            return int(value)
        return value

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def int_scale(self, k, a):
        return k * a

    def halve(self, a):
        return a // 2 if a % 2 == 0 else None

    def cover(self):
        return RATIONALS, Fraction

    def parse(self, text):
        try:
            return int(str(text).strip())
        except ValueError:
            raise GroupError(f'{text!r} is not an integer')


@dataclass(frozen=True)
class IntegersMod(AbelianGroup):
    """Integers modulo m; m = 1 is the trivial group"""

    m: int = 2

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise GroupError(f'modulus must be a positive integer, got {self.m!r}')

    @property
    def name(self):
        return f'Zmod {self.m}'

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise GroupError(f'{value!r} is not a residue')
        return value % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def int_scale(self, k, a):
        return (k * a) % self.m

    def halve(self, a):
        a %= self.m
        if self.m % 2:
            return (a * pow(2, -1, self.m)) % self.m if self.m > 1 else 0
        if a % 2:
            return None
        return a // 2

    def cover(self):
        if self.m % 2:
            return None
        double = IntegersMod(2 * self.m)
        return double, lambda a: double.normalize(2 * a)

    def parse(self, text):
        try:
            return int(str(text).strip()) % self.m
        except ValueError:
            raise GroupError(f'{text!r} is not a residue mod {self.m}')


@dataclass(frozen=True)
class Rationals(AbelianGroup):
    """The rationals, elements stored as Fraction"""

    name = 'Q'

    def normalize(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise GroupError(f'{value!r} is not a rational number')
        return Fraction(value)

    def add(self, a, b):
        return Fraction(a) + Fraction(b)

    def neg(self, a):
        return -Fraction(a)

    def int_scale(self, k, a):
        return k * Fraction(a)

    def halve(self, a):
        return Fraction(a) / 2

    def parse(self, text):
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise GroupError(f'{text!r} is not a rational number')


INTEGERS = Integers()
RATIONALS = Rationals()
TRIVIAL = IntegersMod(1)


def group_from_name(name: str) -> AbelianGroup:
    """
    Look up a group by its instance-file name.

    Args:
        name: "Z", "Q", or "Zmod m"

    Returns:
        The group

    Raises:
        GroupError: If the name is not recognised
    """
    text = ' '.join(str(name).split())
    if text == 'Z':
        return INTEGERS
    if text == 'Q':
        return RATIONALS
    if text.startswith('Zmod'):
        try:
            return IntegersMod(int(text[4:]))
        except ValueError:
            pass
    raise GroupError(f'Unknown group: {name!r}. Expected "Z", "Q", or "Zmod m"')
