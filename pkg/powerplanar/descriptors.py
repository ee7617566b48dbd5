"""
Язык описаний групп.

    expr := atom | atom "x" expr
    atom := "Z" INT | "D" INT | "Q" INT | "QD16" | "SD(" INT "," INT "," INT ")"

D и Q принимают ПОРЯДОК группы (D10, Q16), SD(n,m,t) = Z_n x| Z_m с действием x -> x^t.
Пробелы игнорируются. Ошибки разбора сообщают позицию и ожидаемые токены.
"""
from dataclasses import dataclass

from powerplanar.groups import (
    Group,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_semidihedral_16,
    make_semidirect,
)


class DescriptorError(ValueError):
    def __init__(self, text: str, position: int, expected: tuple[str, ...]) -> None:
        found = repr(text[position]) if position < len(text) else "end of input"
        super().__init__(
            f"cannot parse {text!r} at offset {position}: expected {' or '.join(expected)}, found {found}")
        self.text = text
        self.position = position
        self.expected = expected


@dataclass(frozen=True)
class Atom:
    family: str
    params: tuple[int, ...]

    def build(self) -> Group:
        match self.family:
            case "Z":
                return make_cyclic(*self.params)
            case "D":
                return make_dihedral(*self.params)
            case "Q":
                return make_dicyclic(*self.params)
            case "QD":
                return make_semidihedral_16()
            case "SD":
                return make_semidirect(*self.params)
        raise AssertionError(self.family)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self, literal: str) -> bool:
        self._skip()
        return self.text.startswith(literal, self.pos)

    def _expect(self, literal: str) -> None:
        if not self._peek(literal):
            raise DescriptorError(self.text, self.pos, (repr(literal),))
        self.pos += len(literal)

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise DescriptorError(self.text, start, ("INT",))
        return int(self.text[start:self.pos])

    def atom(self) -> Atom:
        # порядок важен: QD16 раньше Q, SD( раньше прочего
        if self._peek("QD16"):
            self.pos += 4
            return Atom("QD", ())
        if self._peek("SD"):
            self.pos += 2
            self._expect("(")
            n = self._int()
            self._expect(",")
            m = self._int()
            self._expect(",")
            t = self._int()
            self._expect(")")
            return Atom("SD", (n, m, t))
        for family in ("Z", "D", "Q"):
            if self._peek(family):
                self.pos += 1
                return Atom(family, (self._int(),))
        raise DescriptorError(self.text, self.pos, ("'Z'", "'D'", "'Q'", "'QD16'", "'SD('"))

    def expr(self) -> list[Atom]:
        atoms = [self.atom()]
        while self._peek("x"):
            self.pos += 1
            atoms.append(self.atom())
        self._skip()
        if self.pos != len(self.text):
            raise DescriptorError(self.text, self.pos, ("'x'", "end of input"))
        return atoms


def parse_descriptor(text: str) -> list[Atom]:
    return _Parser(text).expr()


def normalize_descriptor(text: str) -> str:
    return "".join(text.split())


def build_group(text: str) -> Group:
    """
    Строит группу по описанию; произведение ассоциативно справа: A x B x C = A x (B x C).

    :raises DescriptorError: Ошибка разбора.
    :raises GroupError: Недопустимые параметры семейства.
    """
    atoms = parse_descriptor(text)
    group = atoms[-1].build()
    for atom in reversed(atoms[:-1]):
        group = make_direct_product(atom.build(), group)
    # описание сохраняем в исходной (нормализованной) записи
    return Group(
        order=group.order,
        table=group.table,
        names=group.names,
        descriptor=normalize_descriptor(text),
        associativity=group.associativity,
    )
