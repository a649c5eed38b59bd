import hypothesis

# Exhaustive helpers inside properties (brute-force girth, primitivity by
# matrix powers) are slow per example; the deadline is noise, cap examples.
hypothesis.settings.register_profile(
    "suite", deadline=None, max_examples=60,
    suppress_health_check=[hypothesis.HealthCheck.too_slow])
hypothesis.settings.load_profile("suite")
