namespace klrcell {}
