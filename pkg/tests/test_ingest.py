import pytest

from gfgen.ingest import (
    ConlluError,
    DependencyFact,
    SentenceFacts,
    StructureError,
    Token,
    facts_to_text,
    parse_conllu,
    parse_conllu_file,
)

TABLE_FACTS = (
    "nsubj(2,1).\n"
    "det(4,3).\n"
    "dobj(2,4).\n"
    "punct(2,5).\n"
    "pos_tag(1,prp).\n"
    "pos_tag(2,vbp).\n"
    "pos_tag(3,dt).\n"
    "pos_tag(4,nn).\n"
    "pos_tag(5,punct).\n"
)


def test_bill_game_fact_set(bill_game_facts):
    deps = {(d.relation, d.head, d.dependent) for d in bill_game_facts.deps}
    assert deps == {("nsubj", 2, 1), ("det", 4, 3), ("dobj", 2, 4), ("punct", 2, 5)}
    tags = {t.index: t.pos for t in bill_game_facts.tokens}
    assert tags == {1: "prp", 2: "vbp", 3: "dt", 4: "nn", 5: "punct"}


def test_facts_to_text_matches_table(bill_game_facts):
    assert facts_to_text(bill_game_facts) == TABLE_FACTS


def test_facts_to_text_golden_file(bill_game_facts, fixtures_dir):
    golden = (fixtures_dir / "bill_game_facts.golden").read_text(encoding="utf-8")
    assert facts_to_text(bill_game_facts) == golden


def test_empty_input():
    assert parse_conllu("") == []
    assert parse_conllu("\n\n") == []


def test_single_token_root_only():
    text = "1\tGo\tgo\tVERB\tVB\t_\t0\troot\t_\t_\n"
    (facts,) = parse_conllu(text)
    assert len(facts.tokens) == 1
    assert facts.deps == frozenset()


def test_minimal_fact_program():
    facts = SentenceFacts(
        sentence_id="t",
        tokens=(Token(1, "rice", "rice", "nn"),),
        deps=frozenset(),
    )
    assert facts_to_text(facts) == "pos_tag(1,nn).\n"


def test_parse_is_deterministic(fixtures_dir):
    path = fixtures_dir / "bill_game.conllu"
    first = facts_to_text(parse_conllu_file(path)[0])
    second = facts_to_text(parse_conllu_file(path)[0])
    assert first == second


def test_multiword_ranges_and_empty_nodes_skipped():
    text = (
        "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
        "1\tde\tde\tADP\tIN\t_\t2\tcase\t_\t_\n"
        "2\tle\tle\tNOUN\tNN\t_\t0\troot\t_\t_\n"
        "2.1\tnull\t_\t_\t_\t_\t_\t_\t_\t_\n"
    )
    (facts,) = parse_conllu(text)
    assert [t.surface for t in facts.tokens] == ["de", "le"]


def test_wrong_column_count_reports_line():
    with pytest.raises(ConlluError, match="line 1"):
        parse_conllu("1\tBill\tBill\n")


def test_non_integer_index_reports_line():
    with pytest.raises(ConlluError, match="non-integer token index"):
        parse_conllu("x\tBill\tBill\tPROPN\tNNP\t_\t0\troot\t_\t_\n")


def test_cyclic_heads_name_sentence():
    text = (
        "# sent_id = loop\n"
        "1\ta\ta\tNOUN\tNN\t_\t2\tdep\t_\t_\n"
        "2\tb\tb\tNOUN\tNN\t_\t1\tdep\t_\t_\n"
    )
    with pytest.raises(StructureError, match="loop"):
        parse_conllu(text)


def test_upos_fallback_mapping():
    text = (
        "1\tdogs\tdog\tNOUN\t_\t_\t2\tnsubj\t_\t_\n"
        "2\trun\trun\tVERB\t_\t_\t0\troot\t_\t_\n"
        "3\t!\t!\tPUNCT\t_\t_\t2\tpunct\t_\t_\n"
    )
    (facts,) = parse_conllu(text)
    assert [t.pos for t in facts.tokens] == ["nn", "vbp", "punct"]


def test_punct_tag_overrides_xpos():
    text = "1\t.\t.\tPUNCT\t.\t_\t0\troot\t_\t_\n"
    (facts,) = parse_conllu(text)
    assert facts.tokens[0].pos == "punct"


def test_udv2_labels_normalized():
    text = (
        "1\tgame\tgame\tNOUN\tNN\t_\t3\tnsubj:pass\t_\t_\n"
        "2\tis\tbe\tAUX\tVBZ\t_\t3\taux:pass\t_\t_\n"
        "3\tplayed\tplay\tVERB\tVBN\t_\t0\troot\t_\t_\n"
    )
    (facts,) = parse_conllu(text)
    relations = {d.relation for d in facts.deps}
    assert relations == {"nsubjpass", "auxpass"}


def test_subtype_relation_rendered_without_colon():
    text = (
        "1\this\this\tPRON\tPRP$\t_\t2\tnmod:poss\t_\t_\n"
        "2\tdog\tdog\tNOUN\tNN\t_\t0\troot\t_\t_\n"
    )
    (facts,) = parse_conllu(text)
    assert "nmod_poss(2,1)." in facts_to_text(facts)


def test_dep_count_invariant_on_corpus(fixtures_dir):
    # every well-formed tree yields token count - 1 dependency facts
    for portal in ("people", "mathematics", "food_drink"):
        for facts in parse_conllu_file(
            fixtures_dir / "corpus" / portal / "sentences.conllu"
        ):
            assert len(facts.deps) == len(facts.tokens) - 1, facts.sentence_id


def test_missing_lemma_falls_back():
    text = (
        "1\tfriends\tfriends\tNOUN\tNNS\t_\t2\tnsubj\t_\t_\n"
        "2\treads\t_\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
    )
    (facts,) = parse_conllu(text)
    assert facts.tokens[1].lemma == "read"


def test_duplicate_dep_triples_collapse():
    facts = SentenceFacts(
        sentence_id="t",
        tokens=(Token(1, "a", "a", "nn"), Token(2, "b", "b", "nn")),
        deps=frozenset([DependencyFact("dep", 2, 1), DependencyFact("dep", 2, 1)]),
    )
    assert len(facts.deps) == 1
