"""Turn a dataclass of defaults into an argparse command line."""

import argparse
from dataclasses import MISSING, fields


def parse_config(cls, argv=None):
    ap = argparse.ArgumentParser(description=cls.__doc__)
    for f in fields(cls):
        default = f.default if f.default is not MISSING else f.default_factory()
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, bool):
            ap.add_argument(flag, action="store_true", default=default)
        elif isinstance(default, (list, tuple)):
            ap.add_argument(flag, nargs="+", default=list(default))
        else:
            ap.add_argument(flag, type=type(default), default=default)
    return cls(**vars(ap.parse_args(argv)))
