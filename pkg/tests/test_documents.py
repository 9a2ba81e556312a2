import pytest

from dyadgames import documents
from dyadgames.errors import DocumentError
from dyadgames.idd import MemoryOneStrategy, TableStrategy
from dyadgames.quiz import PartnerResponse, default_form, score_uniform, score_weighted
from dyadgames.scenarios import DEFAULT_IDD_PAYOFFS, film_game_v1


def roundtrip(doc):
    return documents.loads(documents.dumps_canonical(doc))


class TestCanonicalForm:
    def test_stable_bytes(self):
        doc = {"b": 1, "a": [1.5, 2], "c": {"y": True, "x": None}}
        once = documents.dumps_canonical(doc)
        again = documents.dumps_canonical(roundtrip(doc))
        assert once == again

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            documents.dumps_canonical({"x": float("nan")})


class TestGameDocuments:
    def test_roundtrip(self):
        game = film_game_v1()
        doc = documents.game_to_doc(game)
        parsed = documents.game_from_doc(roundtrip(doc))
        assert documents.game_to_doc(parsed) == doc

    def test_players_mismatch_named(self):
        doc = documents.game_to_doc(film_game_v1())
        doc["players"] = 3
        with pytest.raises(DocumentError, match="players"):
            documents.game_from_doc(doc)

    def test_bad_profile_entry_named(self):
        doc = documents.game_to_doc(film_game_v1())
        doc["payoffs"][2]["profile"] = "nope"
        with pytest.raises(DocumentError, match=r"payoffs\[2\].profile"):
            documents.game_from_doc(doc)

    def test_duplicate_profile_rejected(self):
        doc = documents.game_to_doc(film_game_v1())
        doc["payoffs"][1]["profile"] = [0, 0]
        with pytest.raises(DocumentError, match="twice"):
            documents.game_from_doc(doc)

    def test_wrong_schema_version(self):
        doc = documents.game_to_doc(film_game_v1())
        doc["schema_version"] = 2
        with pytest.raises(DocumentError, match="schema_version"):
            documents.game_from_doc(doc)

    def test_wrong_kind(self):
        doc = documents.game_to_doc(film_game_v1())
        doc["kind"] = "quiz_form"
        with pytest.raises(DocumentError, match="kind"):
            documents.game_from_doc(doc)


class TestQuizDocuments:
    def test_form_roundtrip(self):
        doc = documents.form_to_doc(default_form())
        parsed = documents.form_from_doc(roundtrip(doc))
        assert documents.form_to_doc(parsed) == doc

    def test_response_roundtrip(self):
        response = PartnerResponse(partner_id=2, answers=((2, 3, 5), (0, 1, 9)))
        doc = documents.response_to_doc(response)
        assert documents.response_from_doc(roundtrip(doc)) == response

    def test_report_roundtrip_uniform(self):
        form = default_form()
        r1 = PartnerResponse(1, tuple((7, 2, 1) for _ in range(10)))
        r2 = PartnerResponse(2, tuple((4, 4, 2) for _ in range(10)))
        report = score_uniform(form, r1, r2)
        doc = documents.report_to_doc(report, form)
        parsed = documents.report_from_doc(roundtrip(doc))
        assert parsed == report
        assert doc["questions"][0] == form.questions[0].prompt

    def test_report_roundtrip_weighted(self):
        form = default_form()
        r1 = PartnerResponse(1, tuple((7, 2, 1) for _ in range(10)))
        r2 = PartnerResponse(2, tuple((4, 4, 2) for _ in range(10)))
        report = score_weighted(form, r1, r2)
        parsed = documents.report_from_doc(
            roundtrip(documents.report_to_doc(report, form))
        )
        assert parsed == report

    def test_form_errors_name_question(self):
        doc = documents.form_to_doc(default_form())
        doc["questions"][3]["outcomes"] = ["only", "two"]
        with pytest.raises(DocumentError, match=r"questions\[3\]"):
            documents.form_from_doc(doc)

    def test_response_errors_name_entry(self):
        doc = documents.response_to_doc(PartnerResponse(1, ((10, 0, 0),)))
        doc["answers"][0] = [10, 0]
        with pytest.raises(DocumentError, match=r"answers\[0\]"):
            documents.response_from_doc(doc)


class TestStrategyDocuments:
    def test_memory_one_roundtrip(self):
        strategy = MemoryOneStrategy((1.0, 0.25, 0.5, 0.0))
        doc = documents.strategy_to_doc(strategy)
        assert doc["kind"] == "memory-one"
        assert documents.strategy_from_doc(roundtrip(doc)) == strategy

    def test_table_roundtrip(self):
        strategy = TableStrategy(memory=2, entries=tuple(i / 16 for i in range(16)))
        doc = documents.strategy_to_doc(strategy)
        assert doc["kind"] == "table"
        assert documents.strategy_from_doc(roundtrip(doc)) == strategy

    def test_unknown_kind(self):
        with pytest.raises(DocumentError, match="kind"):
            documents.strategy_from_doc({"schema_version": 1, "kind": "psychic"})


class TestIddConfigDocuments:
    def test_roundtrip(self):
        doc = documents.idd_config_to_doc(
            DEFAULT_IDD_PAYOFFS,
            pat=MemoryOneStrategy((1, 0, 0, 1)),
            gene=MemoryOneStrategy((0, 0, 0, 0)),
            rounds=1000,
            seed=7,
            target=2.0,
        )
        config = documents.idd_config_from_doc(roundtrip(doc))
        assert config["payoffs"] == DEFAULT_IDD_PAYOFFS
        assert config["pat"] == MemoryOneStrategy((1, 0, 0, 1))
        assert config["rounds"] == 1000
        assert config["target"] == 2.0

    def test_payoffs_validated(self):
        doc = documents.idd_config_to_doc(DEFAULT_IDD_PAYOFFS)
        doc["payoffs"]["W"] = -100
        with pytest.raises(DocumentError, match="W"):
            documents.idd_config_from_doc(doc)

    def test_missing_payoff_field_named(self):
        doc = documents.idd_config_to_doc(DEFAULT_IDD_PAYOFFS)
        del doc["payoffs"]["Z"]
        with pytest.raises(DocumentError, match="Z"):
            documents.idd_config_from_doc(doc)
