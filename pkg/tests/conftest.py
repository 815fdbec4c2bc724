import time

SESSION_START = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # acceptance gate runs last so its runtime criterion sees the whole suite
    items.sort(key=lambda item: item.path.name == "test_acceptance.py")
