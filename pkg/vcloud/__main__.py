import sys

from vcloud.vcloud_mpc.cli.cli import main

sys.exit(main())
