"""Frequency dictionaries, descriptor classes and partitions.

A descriptor class groups surface words that the compressed vocabulary
renders with a single code. For class ``i`` the partition records the usage
``N_i`` (tokens of all members), the degeneracy ``G_i`` (member slots) and
the occupancy ``N_i / G_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from .errors import MalformedMapError, PartitionConflictError

MAP_VERSION = "bose-lex/1"
G_MODES = ("declared", "observed")


@dataclass(frozen=True)
class FrequencyDictionary:
    """Word counts plus the total token count (zero counts are never stored)."""

    entries: Mapping[str, int]
    total_tokens: int = field(default=-1)

    def __post_init__(self):
        entries = dict(self.entries)
        for word, count in entries.items():
            if not isinstance(word, str) or not word:
                raise ValueError(f"invalid word {word!r}")
            if int(count) != count or count < 1:
                raise ValueError(f"count for {word!r} must be a positive integer, got {count!r}")
        total = sum(entries.values())
        if self.total_tokens == -1:
            object.__setattr__(self, "total_tokens", total)
        elif self.total_tokens != total:
            raise ValueError(f"total_tokens {self.total_tokens} != sum of counts {total}")
        object.__setattr__(self, "entries", MappingProxyType(entries))

    def __len__(self):
        return len(self.entries)

    def __contains__(self, word):
        return word in self.entries

    def count(self, word: str) -> int:
        return self.entries.get(word, 0)

    def ranked(self) -> list[tuple[str, int]]:
        """Entries by count descending, ties by word ascending."""
        return sorted(self.entries.items(), key=lambda kv: (-kv[1], kv[0]))

    def merge(self, other: "FrequencyDictionary") -> "FrequencyDictionary":
        merged = dict(self.entries)
        for word, count in other.entries.items():
            merged[word] = merged.get(word, 0) + count
        return FrequencyDictionary(merged)


@dataclass(frozen=True)
class DescriptorClass:
    id: str
    members: tuple[str, ...]
    declared_size: int
    observed_size: int
    usage: int
    g_mode: str = "declared"

    @property
    def size(self) -> int:
        """Effective degeneracy G_i under ``g_mode``.

        In observed mode a class with no occurring member keeps one slot, so
        that G_i >= 1 holds; its usage is zero and it contributes nothing.
        """
        if self.g_mode == "observed":
            return max(self.observed_size, 1)
        return self.declared_size

    @property
    def occupancy(self) -> Fraction:
        return Fraction(self.usage, self.size)


class ClassStat(NamedTuple):
    id: str
    usage: int
    size: int
    occupancy: float


@dataclass(frozen=True)
class DescriptorPartition:
    classes: tuple[DescriptorClass, ...]
    unassigned: tuple[str, ...]
    total_tokens: int
    g_mode: str = "declared"

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    def by_id(self) -> dict[str, DescriptorClass]:
        return {c.id: c for c in self.classes}

    @property
    def covered_tokens(self) -> int:
        return sum(c.usage for c in self.classes)

    @property
    def unassigned_tokens(self) -> int:
        return self.total_tokens - self.covered_tokens

    def to_map(self) -> dict:
        return make_map_document((c.id, c.members) for c in self.classes)


def make_map_document(classes: Iterable[tuple[str, Iterable[str]]]) -> dict:
    """Canonical descriptor-map document: classes by id, members sorted."""
    rows = sorted((cid, sorted(members)) for cid, members in classes)
    return {
        "version": MAP_VERSION,
        "classes": [{"id": cid, "members": members} for cid, members in rows],
    }


def parse_map(document) -> list[tuple[str, tuple[str, ...]]]:
    """Validate a descriptor-map document and return ``(id, members)`` pairs."""
    if isinstance(document, Mapping):
        version = document.get("version", MAP_VERSION)
        if version != MAP_VERSION:
            raise MalformedMapError(f"unsupported map version {version!r}")
        classes = document.get("classes")
    else:
        classes = document
    if not isinstance(classes, list):
        raise MalformedMapError("descriptor map needs a list of classes")
    seen_ids = set()
    parsed = []
    for pos, entry in enumerate(classes):
        if not isinstance(entry, Mapping) or "id" not in entry or "members" not in entry:
            raise MalformedMapError(f"class #{pos} must be an object with 'id' and 'members'")
        cid, members = entry["id"], entry["members"]
        if not isinstance(cid, str) or not cid:
            raise MalformedMapError(f"class #{pos} has an invalid id {cid!r}")
        if cid in seen_ids:
            raise MalformedMapError(f"duplicate class id {cid!r}")
        seen_ids.add(cid)
        if not isinstance(members, list) or not members:
            raise MalformedMapError(f"class {cid!r} has an empty member list")
        if not all(isinstance(m, str) and m for m in members):
            raise MalformedMapError(f"class {cid!r} has a non-string or empty member")
        if len(set(members)) != len(members):
            raise MalformedMapError(f"class {cid!r} lists a member twice")
        parsed.append((cid, tuple(members)))
    return parsed


def build_partition(freq: FrequencyDictionary, document, g_mode: str = "declared") -> DescriptorPartition:
    if g_mode not in G_MODES:
        raise ValueError(f"g_mode must be one of {G_MODES}, got {g_mode!r}")
    parsed = parse_map(document)
    owner: dict[str, str] = {}
    for cid, members in parsed:
        for word in members:
            if word in owner:
                first, second = sorted((owner[word], cid))
                raise PartitionConflictError(word, first, second)
            owner[word] = cid

    classes = []
    for cid, members in sorted(parsed):
        counts = [freq.count(w) for w in members]
        classes.append(
            DescriptorClass(
                id=cid,
                members=tuple(sorted(members)),
                declared_size=len(members),
                observed_size=sum(1 for c in counts if c > 0),
                usage=sum(counts),
                g_mode=g_mode,
            )
        )
    unassigned = tuple(sorted(w for w in freq.entries if w not in owner))
    return DescriptorPartition(
        classes=tuple(classes),
        unassigned=unassigned,
        total_tokens=freq.total_tokens,
        g_mode=g_mode,
    )


def class_statistics(partition: DescriptorPartition) -> list[ClassStat]:
    return [ClassStat(c.id, c.usage, c.size, float(c.occupancy)) for c in partition.classes]
