import json

import pytest
from dependency_injector import providers
from typer.testing import CliRunner

from choicedict.core.config.logging import configure_logging
from tools.cli import app, container

from .mocks.mutant_seg_dicts import SkipMatchSegDict

runner = CliRunner()


@pytest.fixture(autouse=True)
def restore_logging():
    yield
    # o handler configurado pela CLI aponta para o stderr do runner
    configure_logging("WARNING")


def _trace(tmp_path, text: str) -> str:
    path = tmp_path / "trace.txt"
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestSpace:
    def test_hidden(self):
        result = runner.invoke(app, ["space", "--n", "1000"])
        assert result.exit_code == 0
        assert result.output.strip() == "flag=1 A=768 tail=232 total=1001"

    def test_self_contained(self):
        result = runner.invoke(app, ["space", "--n", "1000", "--mode", "self-contained"])
        assert result.exit_code == 0
        assert result.output.strip() == "header=19 flag=1 A=768 tail=232 total=1020"

    def test_plain(self):
        result = runner.invoke(app, ["space", "--n", "1000", "--mode", "plain"])
        assert result.output.strip() == "k=64 A=768 tail=232 total=1064"

    def test_machine_readable(self):
        result = runner.invoke(app, ["space", "--n", "5", "--machine-readable"])
        payload = json.loads(result.output)
        assert payload["total_bits"] == 6
        assert payload["b"] == 128

    def test_invalid_n(self):
        result = runner.invoke(app, ["space", "--n", "0"])
        assert result.exit_code == 1
        assert "erro:" in result.output


class TestReplay:
    def test_clean_trace(self, tmp_path):
        path = _trace(tmp_path, "universe=1000\ninsert 7\ncontains 7\nchoice\ndelete 7\niterate\n")
        result = runner.invoke(app, ["replay", "--trace", path, "--fill", "random:3"])
        assert result.exit_code == 0
        assert "ok: 5 operações sem divergência" in result.output

    def test_malformed_trace(self, tmp_path):
        result = runner.invoke(app, ["replay", "--trace", _trace(tmp_path, "insert\n"), "--n", "10"])
        assert result.exit_code == 2
        assert "line 1" in result.output

    def test_n_option_supplies_universe(self, tmp_path):
        path = _trace(tmp_path, "insert 3\nchoice\n")
        assert runner.invoke(app, ["replay", "--trace", path, "--n", "10"]).exit_code == 0
        missing = runner.invoke(app, ["replay", "--trace", path])
        assert missing.exit_code == 2
        assert "universo ausente" in missing.output

    def test_n_option_out_of_range(self, tmp_path):
        path = _trace(tmp_path, "insert 3\ninsert 30\n")
        result = runner.invoke(app, ["replay", "--trace", path, "--n", "10"])
        assert result.exit_code == 2
        assert "line 2" in result.output

    def test_sequence_trace(self, tmp_path):
        path = _trace(tmp_path, "universe=4x8\nwrite 3 5\nread 3\nnonzero\nwrite 3 0\n")
        result = runner.invoke(app, ["replay", "--trace", path, "--fill", "crafted", "--machine-readable"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["ok"] is True
        assert payload["case_counts"] == {"insert_left": 1, "delete_case_2": 1}

    def test_missing_file(self, tmp_path):
        result = runner.invoke(app, ["replay", "--trace", str(tmp_path / "nada.txt")])
        assert result.exit_code == 2

    def test_divergence_reports_minimal_prefix(self, tmp_path):
        path = _trace(tmp_path, "universe=4x8\nwrite 1 5\nread 1\nwrite 2 7\nnonzero\n")
        with container.seg_dict_class.override(providers.Object(SkipMatchSegDict)):
            result = runner.invoke(app, ["replay", "--trace", path, "--fill", "zeros", "--machine-readable"])
        assert result.exit_code == 1
        payload = json.loads(result.output)
        assert payload["ok"] is False
        assert payload["divergence"]["index"] == 0
        assert payload["divergence"]["line"] == 2
        assert payload["minimal_prefix"] == ["write 1 5"]

    def test_divergence_text_output(self, tmp_path):
        path = _trace(tmp_path, "universe=1000\ninsert 300\ncontains 300\ninsert 600\niterate\n")
        with container.seg_dict_class.override(providers.Object(SkipMatchSegDict)):
            result = runner.invoke(app, ["replay", "--trace", path, "--fill", "zeros"])
        assert result.exit_code == 1
        assert "divergência na operação 1 (linha 2): insert 300" in result.output
        assert "prefixo mínimo (1 operações):" in result.output

    def test_same_trace_passes_without_override(self, tmp_path):
        path = _trace(tmp_path, "universe=4x8\nwrite 1 5\nread 1\nwrite 2 7\nnonzero\n")
        result = runner.invoke(app, ["replay", "--trace", path, "--fill", "zeros"])
        assert result.exit_code == 0

    @pytest.mark.parametrize(
        "text",
        [
            "universe=7x8\nwrite 7 9\nwrite 1 300\nread 7\nnonzero\nwrite 7 0\nwrite 4 1\nwrite 1 0\nread 4\n",
            "universe=1000\ninsert 999\ninsert 1\ninsert 257\nchoice\niterate\ndelete 1\ncontains 257\niterate\n",
        ],
        ids=["sequence", "set"],
    )
    def test_ones_and_zeros_fill_agree(self, tmp_path, text):
        path = _trace(tmp_path, text)
        outputs = [
            runner.invoke(app, ["replay", "--trace", path, "--fill", fill, "--machine-readable"])
            for fill in ("zeros", "ones")
        ]
        assert [r.exit_code for r in outputs] == [0, 0]
        assert outputs[0].output == outputs[1].output

    @pytest.mark.parametrize("mode", ["plain", "self-contained"])
    def test_other_modes(self, tmp_path, mode):
        path = _trace(tmp_path, "universe=300\ninsert 257\ninsert 1\ndelete 257\niterate\nchoice\n")
        result = runner.invoke(app, ["replay", "--trace", path, "--mode", mode, "--fill", "ones"])
        assert result.exit_code == 0


class TestBench:
    def test_constant_time_verdict(self):
        result = runner.invoke(app, ["bench", "--n", "256", "--n", "16384", "--ops", "150"])
        assert result.exit_code == 0
        assert "tempo constante: ok" in result.output
        assert "n=16384" in result.output

    def test_machine_readable(self):
        result = runner.invoke(app, ["bench", "--n", "1000", "--ops", "80", "--machine-readable"])
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["constant_time"]["ok"] is True
        assert payload["reports"][0]["footprint_bits"] == 1001

    def test_rejects_zero_ops(self):
        result = runner.invoke(app, ["bench", "--n", "1000", "--ops", "0"])
        assert result.exit_code == 1
