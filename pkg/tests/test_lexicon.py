from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boselex.errors import MalformedMapError, PartitionConflictError
from boselex.lexicon import FrequencyDictionary, build_partition, class_statistics, make_map_document


def doc(**classes):
    return make_map_document(classes.items())


def test_worked_example_partition():
    p = build_partition(FrequencyDictionary({"a": 2}), doc(alpha=["a", "b"]))
    (c,) = p.classes
    assert (c.usage, c.size, c.occupancy) == (2, 2, Fraction(1))


def test_empty_corpus():
    p = build_partition(FrequencyDictionary({}), doc(alpha=["a", "b"]))
    assert (p.classes[0].usage, p.classes[0].size, p.classes[0].occupancy) == (0, 2, 0)


def test_unassigned_words():
    p = build_partition(FrequencyDictionary({"a": 3, "c": 5}), doc(alpha=["a", "b"]))
    assert (p.classes[0].usage, p.classes[0].size) == (3, 2)
    assert p.unassigned == ("c",)
    assert p.unassigned_tokens == 5


def test_class_statistics():
    p = build_partition(FrequencyDictionary({"a": 3, "c": 10}),
                        doc(x=["a", "b"], y=["c", "d", "e", "f", "g"], z=list("hijklmn")))
    rows = class_statistics(p)
    assert [(r.id, r.usage, r.size, r.occupancy) for r in rows] == [
        ("x", 3, 2, 1.5), ("y", 10, 5, 2.0), ("z", 0, 7, 0.0)]


def test_conflict_names_word_and_classes():
    with pytest.raises(PartitionConflictError) as info:
        build_partition(FrequencyDictionary({}), doc(one=["a", "b"], two=["b", "c"]))
    assert info.value.word == "b"
    assert info.value.classes == ("one", "two")
    assert "'b'" in str(info.value)


@pytest.mark.parametrize("bad", [
    {"version": "bose-lex/1", "classes": [{"id": "x", "members": []}]},
    {"version": "bose-lex/1", "classes": [{"id": "x"}]},
    {"version": "bose-lex/1", "classes": [{"id": "", "members": ["a"]}]},
    {"version": "bose-lex/1", "classes": [{"id": "x", "members": ["a", "a"]}]},
    {"version": "bose-lex/1", "classes": [{"id": "x", "members": ["a"]}, {"id": "x", "members": ["b"]}]},
    {"version": "other/2", "classes": []},
    {"version": "bose-lex/1", "classes": "nope"},
])
def test_malformed_maps(bad):
    with pytest.raises(MalformedMapError):
        build_partition(FrequencyDictionary({}), bad)


def test_frequency_dictionary_invariants():
    with pytest.raises(ValueError):
        FrequencyDictionary({"a": 0})
    with pytest.raises(ValueError):
        FrequencyDictionary({"a": 2}, total_tokens=3)
    f = FrequencyDictionary({"b": 1, "a": 2})
    assert f.total_tokens == 3
    assert f.ranked() == [("a", 2), ("b", 1)]


def test_ordering_is_lexicographic():
    p = build_partition(FrequencyDictionary({"z": 1, "m": 1, "a": 1}), doc(k=["q"], b=["r"]))
    assert [c.id for c in p.classes] == ["b", "k"]
    assert p.unassigned == ("a", "m", "z")


words = st.text(alphabet="abcdefgh", min_size=1, max_size=3)


@st.composite
def corpus_and_map(draw):
    counts = draw(st.dictionaries(words, st.integers(1, 50), max_size=15))
    vocab = sorted(set(counts) | set(draw(st.lists(words, max_size=6))))
    chosen = draw(st.lists(st.sampled_from(vocab), unique=True)) if vocab else []
    n_classes = draw(st.integers(1, 4))
    classes = {}
    for i, w in enumerate(chosen):
        classes.setdefault(f"c{i % n_classes}", []).append(w)
    return FrequencyDictionary(counts), make_map_document(classes.items())


@settings(max_examples=100, deadline=None)
@given(corpus_and_map())
def test_partition_totals_and_modes(data):
    freq, document = data
    declared = build_partition(freq, document, "declared")
    observed = build_partition(freq, document, "observed")
    unassigned = sum(freq.count(w) for w in declared.unassigned)
    assert declared.covered_tokens + unassigned == freq.total_tokens
    for d, o in zip(declared.classes, observed.classes):
        assert o.size <= d.declared_size
        if d.usage > 0:
            assert o.occupancy >= d.occupancy
    # idempotent: rebuild from emitted map
    assert build_partition(freq, declared.to_map(), "declared") == declared
