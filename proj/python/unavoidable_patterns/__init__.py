from ._unavoidable import *  # noqa: F401,F403
