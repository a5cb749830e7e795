import json

import rsched as R
from rsched.cli import main


def write_instance(tmp_path, inst, name="inst.json"):
    path = tmp_path / name
    R.save_instance(inst, path)
    return str(path)


def test_solve_path_auto(tmp_path, capsys):
    inst = R.make_instance(R.build_path(6), [(1, 1), (4, 1)], [2, 5])
    infile = write_instance(tmp_path, inst)
    out = str(tmp_path / "sched.json")
    code = main(["solve", "--in", infile, "--out", out])
    captured = capsys.readouterr().out
    assert code == 0
    assert "makespan: 2" in captured
    assert "valid: true" in captured
    ss = R.load_schedule_set(out)
    assert R.validate_set(ss, inst).valid


def test_solve_dp_csv(tmp_path, capsys):
    inst = R.make_instance(
        R.build_path(6),
        [(1, 2), (2, 1), (3, 1), (4, 2), (5, 1), (6, 1)],
        [1, 3, 6],
    )
    infile = write_instance(tmp_path, inst)
    csv = tmp_path / "table.csv"
    code = main(["solve", "--in", infile, "--algo", "k-dp", "--dp-csv", str(csv)])
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "c\\l,1,2,3,4,5,6"
    assert lines[3].endswith("4,4,4")


def test_solve_oracle_infeasible_horizon(tmp_path, monkeypatch, capsys):
    g = R.build_general(3, [(1, 2), (2, 3)])
    inst = R.make_instance(g, [(3, 1)], [1])
    infile = write_instance(tmp_path, inst)
    monkeypatch.setenv("RSCHED_HORIZON", "2")
    code = main(["solve", "--in", infile, "--algo", "oracle"])
    assert code == 3
    assert "infeasible within horizon" in capsys.readouterr().out


def test_solve_gantt(tmp_path, capsys):
    inst = R.make_instance(R.build_path(4), [(3, 2)], [1])
    infile = write_instance(tmp_path, inst)
    code = main(["solve", "--in", infile, "--gantt"])
    assert code == 0
    assert "R1:" in capsys.readouterr().out


def test_validate_good_and_bad(tmp_path, capsys):
    inst = R.make_instance(R.build_path(4), [(3, 2)], [1])
    infile = write_instance(tmp_path, inst)
    span, ss = R.exact_optimum(inst)
    good = tmp_path / "good.json"
    R.save_schedule_set(ss, good)
    assert main(["validate", "--in", infile, "--schedule", str(good)]) == 0
    out = capsys.readouterr().out
    assert "valid: true" in out
    assert f"span: {span}" in out

    # drop the task: still a legal walk but no longer task-completing
    bad = tmp_path / "bad.json"
    empty = R.ScheduleSet(schedules=(R.Schedule(robot=1, segments=()),))
    R.save_schedule_set(empty, bad)
    assert main(["validate", "--in", infile, "--schedule", str(bad)]) == 2
    out = capsys.readouterr().out
    assert "valid: false" in out
    assert "never completed" in out


def test_compare_random_batch(tmp_path, capsys):
    code = main(["compare", "--random", "5,6,path,6,2,3,1"])
    assert code == 0
    first = capsys.readouterr().out
    lines = first.splitlines()
    assert lines[0] == "instance,algo,n,k,m,makespan,oracle_makespan,ratio,wall_time_s"
    assert len(lines) == 7
    # equal durations: every ratio is exactly 1
    assert all(line.split(",")[7] == "1.0000" for line in lines[1:])
    # same seed, same batch
    main(["compare", "--random", "5,6,path,6,2,3,1"])
    second = capsys.readouterr().out
    strip = lambda text: [",".join(l.split(",")[:7]) for l in text.splitlines()]
    assert strip(first) == strip(second)


def test_compare_files(tmp_path, capsys):
    inst = R.make_instance(R.build_cycle(5), [(2, 1), (4, 1)], [1, 3])
    infile = write_instance(tmp_path, inst)
    code = main(["compare", "--in", infile])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[1].split(",")[1] == "cycle"


def test_gadget_star(capsys):
    code = main(["gadget", "star", "--set", "2,2"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    obj = json.loads(out[0])
    assert obj["graph"]["n"] == 5
    assert out[1] == "threshold: 5"


def test_gadget_complete(capsys):
    code = main(["gadget", "complete", "--set", "2,2,2,2", "--k", "2"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "threshold: 4"


def test_gadget_planar(tmp_path, capsys):
    inst = R.make_instance(R.build_path(3), [], [1])
    infile = write_instance(tmp_path, inst)
    code = main(["gadget", "planar", "--graph", infile, "--start", "1"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1] == "threshold: 5"
    parsed = R.instance_from_json(out[0])
    assert parsed.m == 3 and parsed.k == 1


def test_error_exit_code(tmp_path, capsys):
    code = main(["compare"])
    assert code == 2
    assert "error:" in capsys.readouterr().err
