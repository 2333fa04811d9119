import json

from intorder.cli import run

SINGLE_NONEDGE_JSON = json.dumps(
    {
        "n": 4,
        "edges": [[0, 1], [0, 3], [1, 2], [1, 3], [2, 3]],
        "labels": {"0": "a", "1": "b", "2": "c", "3": "d"},
    }
)
NET_JSON = json.dumps(
    {
        "n": 6,
        "edges": [[0, 1], [0, 2], [1, 2], [0, 3], [1, 4], [2, 5]],
        "labels": {"0": "a", "1": "b", "2": "c", "3": "x", "4": "y", "5": "z"},
    }
)
C4_JSON = json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]})
STAR3_JSON = json.dumps({"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]})


class TestDecide:
    def test_single_nonedge4_unique_with_labels(self):
        code, out, err = run(["decide", "--json"], SINGLE_NONEDGE_JSON)
        assert code == 0
        assert json.loads(out) == {
            "unique": True,
            "order": [["a", "c"]],
            "wq_components": 2,
        }

    def test_star3_not_unique(self):
        code, out, _ = run(["decide", "--json"], STAR3_JSON)
        assert code == 1
        payload = json.loads(out)
        assert payload["unique"] is False
        assert payload["buried"] == {"B": [1, 2], "K": [0], "R": [3]}
        assert payload["wq_components"] == 6

    def test_non_interval_input_is_an_input_error(self):
        code, out, err = run(["decide", "--json"], C4_JSON)
        assert code == 2
        assert out == ""
        assert "chordless_cycle" in err

    def test_text_output(self):
        code, out, _ = run(["decide"], SINGLE_NONEDGE_JSON)
        assert code == 0
        assert "uniquely orderable: yes" in out
        assert "order: a<c" in out


class TestRecognize:
    def test_net_graph_rejected_with_triple(self):
        code, out, _ = run(["recognize", "--json"], NET_JSON)
        assert code == 1
        payload = json.loads(out)
        assert payload["kind"] == "asteroidal_triple"
        assert payload["triple"] == ["x", "y", "z"]
        assert payload["witness_paths"][0] == ["x", "a", "b", "y"]

    def test_c4_rejected_with_cycle(self):
        code, out, _ = run(["recognize", "--json"], C4_JSON)
        assert code == 1
        assert json.loads(out)["cycle"] == [0, 1, 2, 3]

    def test_single_nonedge4_accepted_with_intervals(self):
        code, out, _ = run(["recognize", "--json"], SINGLE_NONEDGE_JSON)
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 4
        assert len(payload["intervals"]) == 4


class TestOtherCommands:
    def test_wq_counts(self):
        code, out, _ = run(["wq", "--json"], SINGLE_NONEDGE_JSON)
        assert code == 0
        payload = json.loads(out)
        assert payload["component_count"] == 2
        assert payload["pairs"] == [["a", "c"], ["c", "a"]]

    def test_buried_found(self):
        code, out, _ = run(["buried", "--json"], STAR3_JSON)
        assert code == 0
        payload = json.loads(out)
        assert payload["found"] is True and payload["B"] == [1, 2]

    def test_buried_none(self):
        code, out, _ = run(["buried", "--json"], SINGLE_NONEDGE_JSON)
        assert code == 1
        assert json.loads(out) == {"found": False}

    def test_orders_enumerate(self):
        p4_json = json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
        code, out, _ = run(["orders", "--enumerate", "--json"], p4_json)
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 2 and payload["dual_classes"] == 1
        assert payload["unique"] is True
        assert len(payload["orders"]) == 2

    def test_orders_not_unique_exit_code(self):
        code, out, _ = run(["orders", "--json"], STAR3_JSON)
        assert code == 1
        assert json.loads(out)["dual_classes"] == 3

    def test_orders_on_graph_with_no_associated_order(self):
        c5 = json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]})
        code, out, _ = run(["orders", "--json"], c5)
        assert code == 1
        assert json.loads(out) == {"count": 0, "dual_classes": 0, "unique": False}

    def test_partial_labels_fall_back_to_indices(self):
        g = json.dumps({"n": 3, "edges": [[0, 1]], "labels": {"0": "root"}})
        code, out, _ = run(["decide", "--json"], g)
        assert code == 0
        assert json.loads(out)["order"] == [["root", 2], [1, 2]]

    def test_gadget(self):
        code, out, _ = run(["gadget", "--f", "2,0,1", "--stages", "3", "--json"], None)
        assert code == 0
        payload = json.loads(out)
        assert payload["predicted_B"] == ["a", "b", "x0", "y0", "y1", "y2"]
        assert payload["predicted_K"] == ["k", "x1", "x2"]
        assert payload["predicted_R"] == ["r"]

    def test_gadget_bad_f(self):
        code, _, err = run(["gadget", "--f", "1,1"], None)
        assert code == 2 and "distinct" in err


class TestInputHandling:
    def test_malformed_json(self):
        code, out, err = run(["decide", "--json"], "{not json")
        assert code == 2 and out == "" and "input error" in err

    def test_edgelist_format(self):
        code, out, _ = run(
            ["decide", "--format", "edgelist", "--json"],
            "4\n0 1\n0 3\n1 2\n1 3\n2 3\n",
        )
        assert code == 0
        assert json.loads(out)["order"] == [[0, 2]]

    def test_file_input(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(SINGLE_NONEDGE_JSON)
        code, out, _ = run(["decide", str(path), "--json"], None)
        assert code == 0

    def test_missing_file(self):
        code, _, err = run(["decide", "/no/such/file.json"], None)
        assert code == 2 and "input error" in err

    def test_self_loop_rejected(self):
        code, _, err = run(["decide", "--json"], json.dumps({"n": 2, "edges": [[0, 0]]}))
        assert code == 2 and "self-loop" in err


class TestDeterminism:
    def test_byte_identical_reruns(self):
        for argv, stdin in [
            (["decide", "--json"], STAR3_JSON),
            (["recognize", "--json"], NET_JSON),
            (["gadget", "--f", "3,1,4,0", "--json"], None),
            (["orders", "--enumerate", "--json"], SINGLE_NONEDGE_JSON),
        ]:
            first = run(argv, stdin)
            second = run(argv, stdin)
            assert first == second


class TestCertificateFeedback:
    """Emitted certificates re-validate when fed back through the library."""

    def test_obstruction_json_revalidates(self):
        from intorder import Obstruction, graph_from_jsonable, validate_obstruction

        g = graph_from_jsonable(json.loads(C4_JSON))
        _, out, _ = run(["recognize", "--json"], C4_JSON)
        payload = json.loads(out)
        obs = Obstruction(kind=payload["kind"], cycle=tuple(payload["cycle"]))
        assert validate_obstruction(g, obs)

    def test_representation_json_revalidates(self):
        from intorder import graph_from_jsonable, verify_representation
        from intorder.representation import representation_from_jsonable

        star = json.dumps({"n": 4, "edges": [[0, 1], [0, 2], [0, 3]]})
        g = graph_from_jsonable(json.loads(star))
        _, out, _ = run(["recognize", "--json"], star)
        assert verify_representation(g, representation_from_jsonable(json.loads(out)))

    def test_order_json_revalidates(self):
        from intorder import graph_from_jsonable, is_associated, order_from_pairs

        p4_json = json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
        g = graph_from_jsonable(json.loads(p4_json))
        _, out, _ = run(["decide", "--json"], p4_json)
        pairs = json.loads(out)["order"]
        assert is_associated(g, order_from_pairs(4, pairs))

    def test_buried_json_revalidates(self):
        from intorder import graph_from_jsonable, is_buried

        g = graph_from_jsonable(json.loads(STAR3_JSON))
        _, out, _ = run(["buried", "--json"], STAR3_JSON)
        payload = json.loads(out)
        check = is_buried(g, payload["B"])
        assert check.buried
        assert sorted(check.separators) == payload["K"]
        assert sorted(check.outside) == payload["R"]


def test_selftest_passes():
    code, out, _ = run(["selftest", "--max-n", "4"], None)
    assert code == 0
    assert "selftest: ok" in out
    assert "FAIL" not in out
