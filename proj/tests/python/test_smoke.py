# Copyright 2026 The revlnn authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import subprocess

import pytest

import revlnn


TOFFOLI_REAL = """\
.version 1.0
.numvars 3
.variables a b c
.begin
t3 a b c
.end
"""


def test_parse_and_metrics():
    c = revlnn.parse_real(TOFFOLI_REAL)
    assert c.width == 3
    assert c.num_gates() == 1
    r = revlnn.full_report(c, "toffoli")
    assert (r.n, r.gc, r.qc, r.trc) == (3, 1, 5, 16)
    assert r.nnc == 1


def test_simulate_and_equivalence():
    c = revlnn.parse_real(TOFFOLI_REAL)
    assert revlnn.simulate_reversible(c, [True, True, False]) == [True, True, True]
    dec = revlnn.decompose_circuit(c)
    assert dec.num_gates() == 5
    assert revlnn.equivalent(c, dec)


def test_naive_pass_cost_identity():
    c = revlnn.parse_real(TOFFOLI_REAL)
    dec = revlnn.decompose_circuit(c)
    res = revlnn.naive_pass(dec)
    assert res.qc == 5 + 6 * revlnn.nnc(dec)
    assert revlnn.nnc(res.circuit) == 0
    assert revlnn.pass_preserves_function(dec, res)


def test_exact_synthesis_toffoli():
    c = revlnn.parse_real(TOFFOLI_REAL)
    target = revlnn.SynthesisTarget(3, revlnn.extract_permutation(c))
    best = revlnn.synthesize_minimal(target, 9)
    assert best is not None
    assert best.num_gates() == 9
    assert revlnn.synthesize_minimal(target, 8) is None


def test_real_round_trip():
    c = revlnn.parse_real(TOFFOLI_REAL)
    again = revlnn.parse_real(revlnn.write_real(c))
    assert again == c


def test_macro_library_roundtrip():
    src = os.environ.get("REVLNN_SOURCE_DIR")
    if not src:
        pytest.skip("REVLNN_SOURCE_DIR not set")
    lib = revlnn.load_macro_library_file(os.path.join(src, "data", "macros.json"))
    assert len(lib.entries) >= 4
    for m in lib.entries:
        assert revlnn.verify_macro(m)


def test_benchmark_macro_route():
    src = os.environ.get("REVLNN_SOURCE_DIR")
    if not src:
        pytest.skip("REVLNN_SOURCE_DIR not set")
    bench = revlnn.read_real_file(os.path.join(src, "benchmarks", "3_17_13.real"))
    lib = revlnn.load_macro_library_file(os.path.join(src, "data", "macros.json"))
    dec = revlnn.decompose_circuit(bench)
    assert revlnn.naive_pass(dec).qc == 32
    result = revlnn.macro_pass(bench, lib)
    assert result.qc == 28
    assert revlnn.nnc(result.circuit) == 0
    assert revlnn.pass_preserves_function(dec, result)


def _cli():
    path = os.environ.get("REVLNN_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("REVLNN_CLI not set")
    return path


def test_cli_metrics_and_optimize(tmp_path):
    cli = _cli()
    real = tmp_path / "toffoli.real"
    real.write_text(TOFFOLI_REAL)

    out = subprocess.run([cli, "metrics", str(real), "--format", "csv"],
                         capture_output=True, text=True, check=True)
    row = out.stdout.splitlines()[1]
    assert row.endswith(",3,0,0,1,5,1,4,3.3,16")

    optimized = tmp_path / "out.real"
    out = subprocess.run(
        [cli, "optimize", str(real), "--strategy", "naive", "--out", str(optimized)],
        capture_output=True, text=True, check=True)
    assert "result qc:       11" in out.stdout
    assert "overhead:        2.20" in out.stdout

    verify = subprocess.run([cli, "verify", str(real), str(optimized)],
                            capture_output=True, text=True)
    assert verify.returncode == 0


def test_cli_verify_not_equivalent(tmp_path):
    cli = _cli()
    a = tmp_path / "a.real"
    b = tmp_path / "b.real"
    a.write_text(TOFFOLI_REAL)
    b.write_text(".numvars 3\n.variables a b c\n.begin\nt2 a b\n.end\n")
    out = subprocess.run([cli, "verify", str(a), str(b)], capture_output=True,
                         text=True)
    assert out.returncode == 1
    assert "not equivalent" in out.stdout


def test_cli_local_strategy_round_trips_through_files(tmp_path):
    cli = _cli()
    real = tmp_path / "toffoli.real"
    real.write_text(TOFFOLI_REAL)
    optimized = tmp_path / "local.real"
    out = subprocess.run(
        [cli, "optimize", str(real), "--strategy", "local", "--out", str(optimized)],
        capture_output=True, text=True, check=True)
    assert "output permutation:" in out.stdout
    # the permuted outputs are recorded in the file; plain comparison fails,
    # the permutation-aware one succeeds
    strict = subprocess.run([cli, "verify", str(real), str(optimized)],
                            capture_output=True, text=True)
    assert strict.returncode == 1
    modulo = subprocess.run(
        [cli, "verify", str(real), str(optimized), "--modulo-permutation"],
        capture_output=True, text=True)
    assert modulo.returncode == 0


def test_cli_decompose_and_macro_gen(tmp_path):
    cli = _cli()
    src = os.environ.get("REVLNN_SOURCE_DIR")
    if not src:
        pytest.skip("REVLNN_SOURCE_DIR not set")

    decomposed = tmp_path / "dec.real"
    out = subprocess.run(
        [cli, "decompose", os.path.join(src, "benchmarks", "toffoli.real"),
         "--out", str(decomposed)],
        capture_output=True, text=True, check=True)
    assert "realized qc: 5" in out.stdout
    again = revlnn.read_real_file(str(decomposed))
    assert again.num_gates() == 5

    patterns = tmp_path / "patterns.json"
    patterns.write_text(
        '{"patterns":[{"name":"toffoli_ab_c","width":3,"gates":["t3 a b c"]}]}')
    lib_path = tmp_path / "lib.json"
    out = subprocess.run(
        [cli, "macro-gen", "--patterns", str(patterns), "--out", str(lib_path)],
        capture_output=True, text=True, check=True)
    assert "toffoli_ab_c" in out.stdout
    lib = revlnn.load_macro_library_file(str(lib_path))
    assert lib.entries[0].cost == 9

    # too small a budget exhausts the search
    out = subprocess.run(
        [cli, "macro-gen", "--patterns", str(patterns), "--max-cost", "6"],
        capture_output=True, text=True)
    assert out.returncode == 4


def test_cli_error_exit_codes(tmp_path):
    cli = _cli()
    bad = tmp_path / "bad.real"
    bad.write_text(".numvars 2\n.variables a b\n.begin\nq a\n.end\n")
    out = subprocess.run([cli, "metrics", str(bad)], capture_output=True, text=True)
    assert out.returncode == 2
    assert out.stdout == ""  # no partial output

    # every line is touched by the gate: no free line to borrow
    stuck = tmp_path / "stuck.real"
    stuck.write_text(".numvars 4\n.variables a b c d\n.begin\nt4 a b c d\n.end\n")
    out = subprocess.run([cli, "optimize", str(stuck), "--strategy", "naive"],
                         capture_output=True, text=True)
    assert out.returncode == 3
    assert "t4" in out.stderr

    # a stray V leaves the circuit non-Boolean
    stray = tmp_path / "stray.real"
    stray.write_text(".numvars 2\n.variables a b\n.begin\nv a b\n.end\n")
    ok = tmp_path / "ok.real"
    ok.write_text(".numvars 2\n.variables a b\n.begin\nt2 a b\n.end\n")
    out = subprocess.run([cli, "verify", str(ok), str(stray)],
                         capture_output=True, text=True)
    assert out.returncode == 5


def test_cli_output_is_deterministic(tmp_path):
    cli = _cli()
    src = os.environ.get("REVLNN_SOURCE_DIR")
    if not src:
        pytest.skip("REVLNN_SOURCE_DIR not set")
    bench = os.path.join(src, "benchmarks", "3_17_13.real")
    macros = os.path.join(src, "data", "macros.json")
    runs = [
        subprocess.run(
            [cli, "optimize", bench, "--strategy", "best", "--macros", macros],
            capture_output=True, text=True, check=True).stdout
        for _ in range(2)
    ]
    assert runs[0] == runs[1]
    rows = [
        subprocess.run([cli, "metrics", bench, "--format", "json"],
                       capture_output=True, text=True, check=True).stdout
        for _ in range(2)
    ]
    assert rows[0] == rows[1]
