"""
Integration tests for the qclass command line.

Each test runs ``qclass.cli.run`` on the bundled instance files and checks
the JSON document on stdout, the error report on stderr and the exit status.
"""
import json
from io import StringIO
from pathlib import Path
from typing import Any

import pytest

from qclass.cli import run
from qclass.core.errors import EXIT_FAIL, EXIT_USAGE, EXIT_OK, EXIT_PRECONDITION


def invoke(*argv: str) -> tuple[int, str, str]:
    stdout, stderr = StringIO(), StringIO()
    status = run(list(argv), stdout, stderr)
    return status, stdout.getvalue(), stderr.getvalue()


def invoke_json(*argv: str) -> tuple[int, Any]:
    status, out, err = invoke(*argv)
    assert err == ""
    return status, json.loads(out)


def error_of(err: str) -> dict[str, Any]:
    return json.loads(err)['error']


@pytest.fixture
def instance(instances_dir: Path):
    def path(name: str) -> str:
        return str(instances_dir / f"{name}.json")
    return path


@pytest.fixture
def golden(instances_dir: Path):
    def load(name: str) -> Any:
        return json.loads((instances_dir / "golden" / f"{name}.json").read_text())
    return load


@pytest.mark.integration
class TestGoldenOutputs:
    """Command output against the stored golden documents."""

    @pytest.mark.parametrize("basis", ["M", "F"])
    def test_fig2_omega(self, instance, golden, basis: str) -> None:
        status, document = invoke_json("omega", instance("fig2"), "--basis", basis)
        assert status == EXIT_OK
        assert document == golden(f"fig2.omega-{basis}")

    def test_antichain_orbital(self, instance, golden) -> None:
        status, document = invoke_json("omega", instance("antichain"), "--orbital")
        assert status == EXIT_OK
        assert document == golden("antichain.omega-orbital")

    def test_empty_poset(self, instance, golden) -> None:
        status, document = invoke_json("omega", instance("empty_poset"))
        assert status == EXIT_OK
        assert document == golden("empty_poset.omega-M")

    def test_single_edge_chromatic(self, instance, golden) -> None:
        status, document = invoke_json("chromatic", instance("single_edge"))
        assert status == EXIT_OK
        assert document == golden("single_edge.chromatic-M")

    def test_output_is_canonical(self, instance) -> None:
        _, out, _ = invoke("omega", instance("fig2"))
        assert out == json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n"


@pytest.mark.integration
class TestCommands:
    """Other commands and options."""

    def test_t_degree(self, instance) -> None:
        status, document = invoke_json("chromatic", instance("single_edge"), "--t-degree", "1")
        assert status == EXIT_OK
        assert document['t_degree'] == 1
        assert document['rows'][0]['values'] == [1]

    def test_coeven(self, instance) -> None:
        status, document = invoke_json("omega", instance("antichain"), "--coeven")
        assert status == EXIT_OK
        assert document['form'] == 'coeven'
        assert document['terms'] == [{'alpha': [1, 1], 'coeff': 1}]

    def test_chartable(self, instance) -> None:
        status, document = invoke_json("chartable", instance("fig3"))
        assert status == EXIT_OK
        assert document['order'] == 6
        assert len(document['characters']) == 6
        assert document['characters'][0] == [1] * 6

    def test_chartable_methods_agree(self, instance) -> None:
        _, dixon = invoke_json("chartable", instance("fig2"))
        _, oracle = invoke_json("chartable", instance("fig2"), "--method", "oracle")
        assert dixon == oracle

    def test_orderpoly(self, instance) -> None:
        status, document = invoke_json("orderpoly", instance("fig3"), "--at", "3")
        assert status == EXIT_OK
        assert document['degree'] == 5
        assert document['n'] == 3
        assert document['rows'][0]['class'] == '()'
        assert document['rows'][0]['value'] == 11

    def test_tsv(self, instance) -> None:
        status, out, _ = invoke("omega", instance("fig2"), "--tsv")
        assert status == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "class\tsize\t(1,1,1,1)\t(1,1,2)\t(1,2,1)\t(1,3)"
        assert lines[1] == "()\t1\t2\t2\t1\t1"
        assert lines[2] == "(b d)\t1\t0\t0\t1\t1"


@pytest.mark.integration
class TestVerify:
    """Exit statuses of the verify command."""

    def test_reciprocity_passes(self, instance) -> None:
        status, report = invoke_json("verify", "reciprocity", instance("fig2"))
        assert status == EXIT_OK
        assert report['passed'] is True
        assert report['instance'] == 'fig2'

    def test_f_effective_fails_on_fig1(self, instance) -> None:
        status, report = invoke_json("verify", "f-effective", instance("fig1"))
        assert status == EXIT_FAIL
        assert report['passed'] is False
        assert report['witness']['composition'] == [1, 1, 1, 1]

    def test_m_increasing_holds_on_fig1(self, instance) -> None:
        status, _ = invoke_json("verify", "m-increasing", instance("fig1"))
        assert status == EXIT_OK

    def test_h_vector_not_flawless(self, instance) -> None:
        status, report = invoke_json("verify", "flawless", instance("fig3"), "--h-vector")
        assert status == EXIT_FAIL
        assert report['theorem'] == 'h-flawless'
        assert report['witness']['composition'] == [2, 3]

    def test_orientation_decomposition(self, instance) -> None:
        status, report = invoke_json("verify", "orientation-decomposition", instance("four_cycle"))
        assert status == EXIT_OK
        assert report['passed'] is True

    def test_weighted_reciprocity(self, instance) -> None:
        status, _ = invoke_json("verify", "weighted-reciprocity", instance("weak_chain"))
        assert status == EXIT_OK

    def test_hypothesis_not_met(self, instance) -> None:
        status, out, err = invoke("verify", "reciprocity", instance("fig1"))
        assert status == EXIT_PRECONDITION
        assert out == ""
        error = error_of(err)
        assert error['code'] == EXIT_PRECONDITION
        assert error['type'] == 'PreconditionError'


@pytest.mark.integration
class TestErrors:
    """Usage, input and configuration errors."""

    def test_unknown_command(self) -> None:
        status, _, err = invoke("frobnicate")
        assert status == EXIT_USAGE
        assert error_of(err)['type'] == 'UsageError'

    def test_missing_file(self, tmp_path: Path) -> None:
        status, _, err = invoke("omega", str(tmp_path / "absent.json"))
        assert status == EXIT_USAGE
        assert error_of(err)['type'] == 'InvalidInputError'

    def test_wrong_instance_kind(self, instance) -> None:
        status, _, _ = invoke("omega", instance("four_cycle"))
        assert status == EXIT_USAGE
        status, _, _ = invoke("verify", "orientation-decomposition", instance("fig2"))
        assert status == EXIT_USAGE

    def test_group_must_act_by_automorphisms(self, instance, tmp_path: Path) -> None:
        payload = json.loads(Path(instance("fig2")).read_text())
        payload['group'] = ["(a c)"]
        path = tmp_path / "bad_group.json"
        path.write_text(json.dumps(payload))
        status, _, _ = invoke("omega", str(path))
        assert status == EXIT_USAGE

    def test_size_bound_from_environment(self, instance, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("QCLASS_MAX_N", "2")
        status, _, err = invoke("omega", instance("fig2"))
        assert status == EXIT_PRECONDITION
        assert error_of(err)['type'] == 'ResourceError'

    def test_bad_environment_value(self, instance, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("QCLASS_MAX_N", "many")
        status, _, err = invoke("omega", instance("fig2"))
        assert status == EXIT_USAGE
        assert error_of(err)['data']['variable'] == 'QCLASS_MAX_N'

    def test_config_file(self, instance, tmp_path: Path) -> None:
        config = tmp_path / "qclass.json"
        config.write_text(json.dumps({'limits': {'max_n': 3}}))
        status, _, err = invoke("omega", instance("fig2"), "--config", str(config))
        assert status == EXIT_PRECONDITION
        assert error_of(err)['type'] == 'ResourceError'

    def test_invalid_config_file(self, instance, tmp_path: Path) -> None:
        config = tmp_path / "qclass.json"
        config.write_text("{not json")
        status, _, err = invoke("omega", instance("fig2"), "--config", str(config))
        assert status == EXIT_USAGE
        assert error_of(err)['type'] == 'ConfigurationError'


@pytest.mark.integration
class TestSelftest:
    """The random-instance harness through the command line."""

    def test_small_run(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.delenv("QCLASS_MAX_N", raising=False)
        status, summary = invoke_json("selftest", "--seed", "5", "--count", "2", "--workers", "2")
        assert status == EXIT_OK
        assert summary['passed'] is True
        assert summary['seed'] == 5
        assert summary['count'] == 2

    def test_single_suite(self) -> None:
        status, summary = invoke_json("selftest", "--count", "1", "--suite", "orbital")
        assert status == EXIT_OK
        assert list(summary['suites']) == ['orbital']

    def test_bad_count(self) -> None:
        status, _, err = invoke("selftest", "--count", "-1")
        assert status == EXIT_USAGE
        assert error_of(err)['type'] == 'UsageError'
