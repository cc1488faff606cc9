from hypothesis import settings

# reproducible property tests: same examples every run, no wall-clock deadline
settings.register_profile("repro", deadline=None, derandomize=True)
settings.load_profile("repro")
