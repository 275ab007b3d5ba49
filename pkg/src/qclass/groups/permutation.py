"""
Permutations of a finite labelled ground set.

A permutation stores its domain (sorted labels) and, for every position i,
the position of the image of ``domain[i]``. Products compose right to left:
(g * h)(x) = g(h(x)).
"""
import re
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping

from qclass.core.errors import InvalidInputError


_CYCLE = re.compile(r'\(([^()]*)\)')


@dataclass(frozen=True)
class Permutation:
    """A bijection of a finite set of labels.

    Attributes:
        domain: Sorted ground-set labels
        array: ``array[i]`` is the index in ``domain`` of the image of ``domain[i]``

    Examples:
        >>> g = Permutation.parse("(a c)(b d)", "abcd")
        >>> g("a"), g.sign, str(g)
        ('c', 1, '(a c)(b d)')
    """
    domain: tuple[str, ...]
    array: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.domain) != len(self.array) or sorted(self.array) != list(range(len(self.array))):
            raise InvalidInputError(
                "Permutation is not a bijection of its domain",
                data={"domain": list(self.domain), "array": list(self.array)}
            )

    @classmethod
    def identity(cls, domain: Iterable[str]) -> 'Permutation':
        labels = tuple(sorted(domain))
        return cls(labels, tuple(range(len(labels))))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, str]) -> 'Permutation':
        """
        Build a permutation from an explicit label map.

        Raises:
            InvalidInputError: If the map is not a bijection of its keys
        """
        labels = tuple(sorted(mapping))
        index = {x: i for i, x in enumerate(labels)}
        try:
            array = tuple(index[mapping[x]] for x in labels)
        except KeyError as e:
            raise InvalidInputError(
                f"Image {e.args[0]!r} is not in the domain",
                data={"domain": list(labels)}
            )
        return cls(labels, array)

    @classmethod
    def parse(cls, text: str, domain: Iterable[str]) -> 'Permutation':
        """
        Parse cycle notation over ``domain``.

        Accepts "(a c)(b d)", "(a,c)(b,d)" and, when every character is a
        label, "(ac)(bd)". The identity is "()" or the empty string.

        Raises:
            InvalidInputError: If the text is malformed, names an unknown
                label, or repeats a label
        """
        labels = tuple(sorted(domain))
        known = set(labels)
        stripped = text.strip()
        if _CYCLE.sub('', stripped).strip():
            raise InvalidInputError(
                f"Malformed cycle notation: '{text}'",
                data={"text": text}
            )

        mapping = {x: x for x in labels}
        moved: set[str] = set()
        for content in _CYCLE.findall(stripped):
            cycle = _split_cycle(content, known, text)
            for x in cycle:
                if x not in known:
                    raise InvalidInputError(
                        f"Unknown label '{x}' in permutation '{text}'",
                        data={"text": text, "label": x}
                    )
                if x in moved:
                    raise InvalidInputError(
                        f"Label '{x}' appears twice in permutation '{text}'",
                        data={"text": text, "label": x}
                    )
                moved.add(x)
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                mapping[x] = y
        return cls.from_mapping(mapping)

    def __call__(self, label: str) -> str:
        try:
            return self._images[label]
        except KeyError:
            raise InvalidInputError(
                f"Label '{label}' is not in the domain of {self}",
                data={"label": label, "domain": list(self.domain)}
            )

    @cached_property
    def _images(self) -> dict[str, str]:
        return {x: self.domain[j] for x, j in zip(self.domain, self.array)}

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.domain != other.domain:
            raise InvalidInputError(
                "Cannot multiply permutations of different ground sets",
                data={"left": list(self.domain), "right": list(other.domain)}
            )
        return Permutation(self.domain, tuple(self.array[j] for j in other.array))

    def inverse(self) -> 'Permutation':
        inv = [0] * len(self.array)
        for i, j in enumerate(self.array):
            inv[j] = i
        return Permutation(self.domain, tuple(inv))

    def __pow__(self, k: int) -> 'Permutation':
        base = self if k >= 0 else self.inverse()
        result = Permutation(self.domain, tuple(range(len(self.domain))))
        for _ in range(abs(k)):
            result = base * result
        return result

    def mapping(self) -> dict[str, str]:
        return dict(self._images)

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.array))

    def cycles(self, include_fixed: bool = False) -> list[tuple[str, ...]]:
        """Cycle decomposition Cyc(g), each cycle starting at its least label."""
        seen = [False] * len(self.array)
        result = []
        for start in range(len(self.array)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(self.domain[i])
                i = self.array[i]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    @property
    def sign(self) -> int:
        """(-1)^(|N| - number of cycles)."""
        return -1 if (len(self.domain) - len(self.cycles(include_fixed=True))) % 2 else 1

    @property
    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def act_on_set(self, labels: Iterable[str]) -> frozenset[str]:
        return frozenset(self(x) for x in labels)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"


def _split_cycle(content: str, known: set[str], text: str) -> list[str]:
    content = content.strip()
    if not content:
        return []
    if ',' in content:
        return [part.strip() for part in content.split(',')]
    if any(ch.isspace() for ch in content):
        return content.split()
    if content in known:
        return [content]
    if all(ch in known for ch in content):
        return list(content)
    raise InvalidInputError(
        f"Cannot split cycle '({content})' of '{text}' into labels",
        data={"text": text, "cycle": content}
    )
