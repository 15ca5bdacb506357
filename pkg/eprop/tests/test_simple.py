import eprop


def test_load():
    eprop
    assert eprop.__version__
