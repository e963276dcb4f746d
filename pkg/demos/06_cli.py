# %% [markdown]
# # The JSON front end
#
# Every command takes one task document and prints a report. Exit code 3
# marks a negative verdict, 2 marks bad input.

# %%
import json
import subprocess
import sys

tasks = [
    {"command": "tracepoly", "payload": {"n": 4}},
    {"command": "borcea", "payload": {"n": 3, "base": {"genus": 0, "punctures": 4}}},
    {"command": "feasibility", "payload": {"weight": 3, "base": {"genus": 2, "punctures": 0}}},
]
for task in tasks:
    proc = subprocess.run([sys.executable, "-m", "hodgemax"], input=json.dumps(task),
                          capture_output=True, text=True)
    print(f"$ {task['command']}  (exit {proc.returncode})")
    print(proc.stdout)

# %%
proc = subprocess.run([sys.executable, "-m", "hodgemax", "--json"],
                      input=json.dumps(tasks[0]), capture_output=True, text=True)
print(proc.stdout)
