from hypothesis import HealthCheck, settings

# exact-arithmetic examples can be individually slow; cap counts, not time
settings.register_profile(
    "exact",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
