from nonelem.cli import main

main(prog_name="nonelem")
