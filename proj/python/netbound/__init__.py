from ._netbound import *  # noqa: F401,F403
