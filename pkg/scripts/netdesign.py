#!/usr/bin/env python3

import sys

from netdesign.cli import run


if __name__ == '__main__':
    sys.exit(run())
