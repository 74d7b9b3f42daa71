import time


def pytest_sessionstart(session):
    session.config._wall_t0 = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.perf_counter() - getattr(config, "_wall_t0", time.perf_counter())
    terminalreporter.write_line(f"total suite wall time: {elapsed:.2f} s")
