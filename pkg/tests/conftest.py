from hypothesis import settings

settings.register_profile("ablab", max_examples=50, deadline=None)
settings.load_profile("ablab")
