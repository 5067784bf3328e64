def test_importable():
    import circlespace

    assert hasattr(circlespace, "__name__")
    assert circlespace.__version__ == "0.1.0"
