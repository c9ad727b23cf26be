# License: MIT

import sys

from qhrand.cli import run


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
