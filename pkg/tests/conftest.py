import os

import hypothesis

hypothesis.settings.register_profile("ci", max_examples=200, deadline=None)
hypothesis.settings.register_profile("dev", max_examples=50)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))
