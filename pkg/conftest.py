import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "graphsim.settings")
django.setup()
