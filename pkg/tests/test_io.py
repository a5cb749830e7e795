import json

import rsched as R
from conftest import example_schedule_sets, fig_general_instance


def test_instance_roundtrip_each_shape():
    shapes = [
        R.make_instance(R.build_path(6), [(2, 1)], [4]),
        R.make_instance(R.build_cycle(5), [(3, 2)], [1, 4]),
        R.make_instance(R.build_tadpole(4, 2), [(5, 1), (2, 2)], [6]),
        fig_general_instance(),
    ]
    for inst in shapes:
        text = R.instance_to_json(inst)
        back = R.instance_from_json(text)
        assert back == inst
        assert R.instance_to_json(back) == text  # byte-stable


def test_instance_json_field_order():
    inst = R.make_instance(R.build_path(3), [(2, 2)], [1])
    obj = json.loads(R.instance_to_json(inst))
    assert list(obj) == ["graph", "tasks", "robots"]
    assert obj["graph"] == {"type": "path", "n": 3}
    assert obj["tasks"] == [{"vertex": 2, "duration": 2}]
    assert obj["robots"] == [{"start": 1}]


def test_schedule_set_roundtrip():
    first, second = example_schedule_sets()
    for ss in (first, second):
        text = R.schedule_set_to_json(ss)
        back = R.schedule_set_from_json(text)
        assert back == ss
        assert R.schedule_set_to_json(back) == text


def test_file_helpers(tmp_path):
    inst = R.make_instance(R.build_cycle(4), [(2, 1)], [4])
    p = tmp_path / "inst.json"
    R.save_instance(inst, p)
    assert R.load_instance(p) == inst

    span, ss = R.exact_optimum(inst)
    q = tmp_path / "sched.json"
    R.save_schedule_set(ss, q)
    assert R.load_schedule_set(q) == ss
