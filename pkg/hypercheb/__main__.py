# encoding='utf-8'

import sys

from hypercheb.tools.cli import main

sys.exit(main())
