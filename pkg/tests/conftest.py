from hypothesis import settings

# first calls warm enumeration caches, so wall-clock deadlines are noisy
settings.register_profile("wpposet", deadline=None)
settings.load_profile("wpposet")
