#!/usr/bin/env python

from leibniz.cli import main

if __name__ == '__main__':
    main()
