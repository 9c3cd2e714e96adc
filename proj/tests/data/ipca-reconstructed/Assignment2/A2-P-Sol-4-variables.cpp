#include <iostream>
using namespace std;
int main()
{
	int input, answer = 1;
	cout << "Enter number to find factorial: ";
	cin >> input;
	int step = input;
	do
	{
		if (step > 0)
			answer = answer * step;
		step--;
	} while (step > 0);
	cout << input << "! = " << answer << endl;
	return 0;
}
