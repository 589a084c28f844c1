from trikit.cli import main

main()
