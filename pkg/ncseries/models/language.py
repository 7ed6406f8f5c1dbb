"""
Models for linked languages and shift-plethystic trees.

A linked language is described by an alphabet predicate and a link
predicate on consecutive letters; a right module adds a head alphabet and
head links. Plane rooted trees are recursive pydantic models whose vertex
colors are their heights.
"""

from typing import Callable, List, Optional, Tuple

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, model_validator

from ncseries.models.series import Word


class LinkSpec(BaseModel):
    """Alphabet A (a predicate on letter indices) and links B on ordered pairs."""

    model_config = ConfigDict(frozen=True)

    alphabet: Callable[[int], bool]
    links: Callable[[int, int], bool]
    name: str = "custom"

    def link(self, i: int, j: int) -> bool:
        """Membership in B, restricted to A x A."""
        return self.alphabet(i) and self.alphabet(j) and self.links(i, j)

    def letters(self, bound: int) -> List[int]:
        return [k for k in range(bound + 1) if self.alphabet(k)]

    def contains(self, word: Word) -> bool:
        """Membership of a word in L = 1 + A + L_B."""
        if not all(self.alphabet(k) for k in word):
            return False
        return all(self.links(a, b) for a, b in zip(word, word[1:]))


class ModuleSpec(BaseModel):
    """Right module N = A1 + L_{C,B}: head letters A1, first link C, later links B."""

    model_config = ConfigDict(frozen=True)

    head_alphabet: Callable[[int], bool]
    head_links: Callable[[int, int], bool]
    body: LinkSpec
    name: str = "custom"

    def head_link(self, i: int, j: int) -> bool:
        """Membership in C, restricted to A1 x A."""
        return self.head_alphabet(i) and self.body.alphabet(j) and self.head_links(i, j)

    def contains(self, word: Word) -> bool:
        if not word or not self.head_alphabet(word[0]):
            return False
        if len(word) == 1:
            return True
        if not all(self.body.alphabet(k) for k in word[1:]):
            return False
        if not self.head_links(word[0], word[1]):
            return False
        return all(self.body.links(a, b) for a, b in zip(word[1:], word[2:]))


class PlaneTree(BaseModel):
    """A plane rooted tree; each vertex is colored by its height."""

    model_config = ConfigDict(frozen=True)

    children: Tuple["PlaneTree", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(child.size for child in self.children)

    @property
    def height(self) -> int:
        return 1 + max((child.height for child in self.children), default=-1)

    def path_length(self, depth: int = 0) -> int:
        """Sum of the heights of all vertices."""
        return depth + sum(child.path_length(depth + 1) for child in self.children)

    def word(self, root_color: int = 0) -> Word:
        """Preorder word: X_c followed by the shifted words of the subtrees."""
        letters = [root_color]
        for child in self.children:
            letters.extend(child.word(root_color + 1))
        return tuple(letters)

    @classmethod
    def from_word(cls, word: Word, root_color: int = 0) -> "PlaneTree":
        """Rebuild the unique tree whose preorder word is ``word``."""

        def parse(pos: int, color: int) -> Tuple["PlaneTree", int]:
            pos += 1
            children = []
            while pos < len(word) and word[pos] == color + 1:
                child, pos = parse(pos, color + 1)
                children.append(child)
            return cls(children=tuple(children)), pos

        if not word or word[0] != root_color:
            raise ValueError(f"Word {word} does not start with the root color {root_color}")
        tree, end = parse(0, root_color)
        if end != len(word):
            raise ValueError(f"Word {word} is not the preorder word of a plane tree")
        return tree


PlaneTree.model_rebuild()


class InvolutionReport(BaseModel):
    """Outcome of an exhaustive sign-reversing involution check."""

    name: str
    pairs_checked: int
    fixed_points: List[Tuple[Word, Word]]
    failures: List[str] = []
    passed: bool = True

    @model_validator(mode='after')
    def validate_outcome(self) -> Self:
        """A report with failures can never be marked as passed."""
        if self.failures:
            self.passed = False
        return self


class SignedSumReport(BaseModel):
    """Signed composition counts for the hatted sets."""

    n: int
    shifted: bool
    per_k: List[int]
    total: int
    excluded: List[List[int]]
    rows: Optional[List[List[List[int]]]] = None
