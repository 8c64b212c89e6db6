from typing import Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from abacus_partitions.errors import InvalidTree
from abacus_partitions.partitions.abacus import CoreQuotient, combine, two_quotient
from abacus_partitions.partitions.partition import EMPTY, Partition, staircase


class QuotientTree(BaseModel):
    """
    Oriented binary tree obtained by iterating the core-quotient map.

    Each node is labelled by the core index of its partition; an internal
    node has the trees of mu and nu as its two ordered children. Serialises
    to {"label": m, "children": [t1, t2]}, or {"label": m} for a leaf.
    """

    label: int = Field(..., ge=0, description="Core index of the partition at this node.")
    children: Optional[list["QuotientTree"]] = Field(None, description="Trees of mu and nu, in order.")

    @field_validator("children")
    @classmethod
    def _two_or_none(cls, value):
        if value is not None and len(value) != 2:
            raise ValueError(f"an internal node needs exactly two children, got {len(value)}")
        return value or None

    @property
    def is_leaf(self) -> bool:
        return self.children is None

    @classmethod
    def leaf(cls, label: int) -> "QuotientTree":
        return cls(label=label)

    @classmethod
    def node(cls, label: int, left: "QuotientTree", right: "QuotientTree") -> "QuotientTree":
        return cls(label=label, children=[left, right])

    @classmethod
    def from_json(cls, text: str) -> "QuotientTree":
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise InvalidTree(f"Not a quotient tree: {e}")

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True)

    def render(self, indent: str = "") -> str:
        """Indented outline, root first, children below it."""
        lines = [f"{indent}{self.label}"]
        for child in self.children or []:
            lines.append(child.render(indent + "  "))
        return "\n".join(lines)


QuotientTree.model_rebuild()


def tree_encode(partition: Partition) -> QuotientTree:
    core_quotient = two_quotient(partition)
    mu, nu = core_quotient.quotient
    if not mu and not nu:
        return QuotientTree.leaf(core_quotient.core_index)
    return QuotientTree.node(core_quotient.core_index, tree_encode(mu), tree_encode(nu))


def tree_decode(tree: QuotientTree) -> Partition:
    if tree.is_leaf:
        return staircase(tree.label)

    left, right = tree.children
    mu, nu = tree_decode(left), tree_decode(right)
    if mu == EMPTY and nu == EMPTY:
        raise InvalidTree(
            f"Node labelled {tree.label} has two children that both encode the empty partition."
        )
    return combine(CoreQuotient(tree.label, (mu, nu)))
