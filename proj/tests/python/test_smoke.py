import json

import kauffman


def test_catalan_counts():
    assert [len(kauffman.enumerate_jones(n)) for n in range(2, 6)] == [2, 5, 14, 42]
    assert kauffman.catalan(4) == 14


def test_check_identities():
    assert kauffman.check("K4", "xxyx = xyxx")
    assert not kauffman.check("K4", "xy = yx")
    assert kauffman.check("J4", "xxx = xx")
    assert not kauffman.check("K3", "xxx = xx")


def test_verdict_json():
    verdict = json.loads(kauffman.check_verdict("K4", "xy = yx"))
    assert verdict["holds"] is False
    assert verdict["witness"]["type"] == "condition"


def test_diagram_arithmetic():
    h1 = kauffman.WireDiagram.hook(4, 1)
    assert (h1 * h1).circles == 1
    assert h1.is_planar()
    jones, circles = kauffman.evaluate("h1h2h1", 4)
    assert circles == 0
    assert jones == h1.literal()


def test_render_stable():
    h1 = kauffman.WireDiagram.hook(4, 1)
    assert h1.render() == h1.render()
    assert "circles: 0" in h1.render()


def test_verify_suite():
    ok, text = kauffman.verify("catalan", 5)
    assert ok
    assert "PASS" in text
